#include "mistab/report.hpp"

#include "mistab/parse.hpp"
#include "mistab/version.hpp"

namespace mistab {

using nlohmann::json;

namespace {

json optional_int(const std::optional<int>& v) {
    return v ? json(*v) : json(nullptr);
}

std::optional<int> int_or_null(const json& v) {
    if (v.is_null())
        return std::nullopt;
    return v.get<int>();
}

json support_to_json(const PrimeSupport& p, const Ring& ring) {
    json arr = json::array();
    for (int v : p.vars())
        arr.push_back(ring.variable(v));
    return arr;
}

PrimeSupport support_from_json(const json& arr, const Ring& ring) {
    std::vector<int> vars;
    for (const auto& name : arr) {
        auto idx = ring.index_of(name.get<std::string>());
        if (!idx)
            throw UsageError("unknown variable in report document");
        vars.push_back(*idx);
    }
    return PrimeSupport(std::move(vars), ring.nvars());
}

} // namespace

std::string cert_level_name(CertLevel level) {
    switch (level) {
    case CertLevel::Observed:
        return "observed";
    case CertLevel::Conditional:
        return "conditional";
    case CertLevel::Certified:
        return "certified";
    }
    return "observed";
}

CertLevel cert_level_from_name(const std::string& name) {
    if (name == "certified")
        return CertLevel::Certified;
    if (name == "conditional")
        return CertLevel::Conditional;
    if (name == "observed")
        return CertLevel::Observed;
    throw UsageError("unknown certification level '" + name + "'");
}

json ideal_to_json(const MonomialIdeal& ideal) {
    json gens = json::array();
    for (const auto& g : ideal.gens())
        gens.push_back(g.str(ideal.ring()));
    return gens;
}

json supports_to_json(const std::vector<PrimeSupport>& supports, const Ring& ring) {
    json arr = json::array();
    for (const auto& p : supports)
        arr.push_back(support_to_json(p, ring));
    return arr;
}

json betti_to_json(const BettiTable& table, const Ring& ring) {
    json entries = json::array();
    for (const auto& [key, rank] : table.entries()) {
        entries.push_back(json{{"degree", key.first},
                               {"multidegree", key.second.str(ring)},
                               {"rank", rank}});
    }
    return json{{"entries", entries}, {"pd", table.pd()}};
}

json report_to_json(const StabilityReport& report, bool stable_output) {
    const Ring& ring = report.ideal.ring();
    json doc;
    doc["tool"] = json{{"name", kToolName}, {"version", kToolVersion}};
    doc["ring"] = json(ring.variables());
    doc["ideal"] = ideal_to_json(report.ideal);
    doc["horizon"] = report.horizon;
    doc["with_closure"] = report.with_closure;

    json records = json::array();
    for (const auto& r : report.records) {
        json rec;
        rec["n"] = r.n;
        rec["ass"] = supports_to_json(r.ass, ring);
        rec["depth"] = r.depth;
        rec["closure_ass"] =
            r.closure_ass ? supports_to_json(*r.closure_ass, ring) : json(nullptr);
        rec["closure_depth"] = r.closure_depth ? json(*r.closure_depth) : json(nullptr);
        rec["strong_persistence"] =
            r.strong_persistence ? json(*r.strong_persistence) : json(nullptr);
        rec["time_ms"] = stable_output ? 0.0 : r.time_ms;
        records.push_back(std::move(rec));
    }
    doc["records"] = std::move(records);

    doc["indices"] = json{{"astab_observed", optional_int(report.astab_observed)},
                          {"dstab_observed", optional_int(report.dstab_observed)},
                          {"astabbar_observed", optional_int(report.astabbar_observed)}};

    json cert = json::object();
    for (const auto& [key, value] : report.certification)
        cert[key] = json{{"level", cert_level_name(value.level)}, {"reason", value.reason}};
    doc["certification"] = std::move(cert);
    return doc;
}

StabilityReport report_from_json(const json& doc) {
    std::vector<std::string> vars;
    for (const auto& v : doc.at("ring"))
        vars.push_back(v.get<std::string>());
    Ring ring(vars);

    std::vector<Monomial> gens;
    for (const auto& g : doc.at("ideal"))
        gens.push_back(parse_monomial(ring, g.get<std::string>()));
    MonomialIdeal ideal = MonomialIdeal::make(ring, std::move(gens));

    StabilityReport report{ideal,
                           doc.at("horizon").get<int>(),
                           doc.at("with_closure").get<bool>(),
                           {},
                           {},
                           {},
                           {},
                           {}};

    for (const auto& rec : doc.at("records")) {
        PowerRecord r;
        r.n = rec.at("n").get<int>();
        for (const auto& p : rec.at("ass"))
            r.ass.push_back(support_from_json(p, ring));
        r.depth = rec.at("depth").get<int>();
        if (!rec.at("closure_ass").is_null()) {
            std::vector<PrimeSupport> cl;
            for (const auto& p : rec.at("closure_ass"))
                cl.push_back(support_from_json(p, ring));
            r.closure_ass = std::move(cl);
        }
        if (!rec.at("closure_depth").is_null())
            r.closure_depth = rec.at("closure_depth").get<int>();
        if (!rec.at("strong_persistence").is_null())
            r.strong_persistence = rec.at("strong_persistence").get<bool>();
        r.time_ms = rec.at("time_ms").get<double>();
        report.records.push_back(std::move(r));
    }

    const auto& indices = doc.at("indices");
    report.astab_observed = int_or_null(indices.at("astab_observed"));
    report.dstab_observed = int_or_null(indices.at("dstab_observed"));
    report.astabbar_observed = int_or_null(indices.at("astabbar_observed"));

    for (const auto& [key, value] : doc.at("certification").items())
        report.certification[key] = Certification{
            cert_level_from_name(value.at("level").get<std::string>()),
            value.at("reason").get<std::string>()};

    return report;
}

} // namespace mistab
