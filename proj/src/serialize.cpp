#include "sturmion/serialize.hpp"

#include "sturmion/error.hpp"

namespace sturmion {

using nlohmann::json;

namespace {

Status status_from_string(const std::string& s) {
    for (Status st : {Status::ExactMatch, Status::WithinTolerance, Status::Mismatch, Status::Skipped}) {
        if (to_string(st) == s) return st;
    }
    throw Error(ErrorKind::Parse, "unknown status '" + s + "'");
}

json witness_json(const Witness& w) {
    return {{"field", w.field}, {"index", w.index}, {"expected", to_json(w.expected)}, {"actual", to_json(w.actual)}};
}

Witness witness_from_json(const json& j) {
    return {j.at("field").get<std::string>(), j.at("index").get<int>(), scalar_from_json(j.at("expected")),
            scalar_from_json(j.at("actual"))};
}

}  // namespace

json to_json(const Scalar& x) {
    if (x.is_exact()) return x.to_string();
    return {{"decimal", x.to_string()}, {"precision_bits", *x.precision()}};
}

Scalar scalar_from_json(const json& j) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (!j.is_object()) throw Error(ErrorKind::Parse, "scalar must be a string or an object");
    return Scalar(BigFloat::from_string(j.at("decimal").get<std::string>(), j.at("precision_bits").get<long>()));
}

json to_json(const std::vector<Scalar>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(to_json(x));
    return out;
}

json to_json(const JacobiMatrix& J) { return {{"b", to_json(J.b())}, {"u", to_json(J.u())}}; }

json to_json(const SpectralData& data) {
    return {{"nodes", to_json(data.nodes)}, {"weights", to_json(data.weights)}};
}

json to_json(const GridSpec& spec) {
    return {{"spec", to_string(spec)}, {"N", spec.N}, {"precision_bits", spec.precision}};
}

GridSpec grid_from_json(const json& j) {
    return parse_grid(j.at("spec").get<std::string>(), j.at("N").get<int>(), j.at("precision_bits").get<long>());
}

json to_json(const CheckReport& r) {
    json out{{"name", r.name}, {"N", r.N}, {"status", to_string(r.status)}};
    out["grid"] = r.grid ? to_json(*r.grid) : json(nullptr);
    out["residual"] = r.residual ? to_json(*r.residual) : json(nullptr);
    out["witness"] = r.witness ? witness_json(*r.witness) : json(nullptr);
    out["reason"] = r.reason;
    json subs = json::array();
    for (const auto& s : r.subchecks) {
        json sj{{"name", s.name}, {"status", to_string(s.status)}};
        sj["residual"] = s.residual ? to_json(*s.residual) : json(nullptr);
        sj["witness"] = s.witness ? witness_json(*s.witness) : json(nullptr);
        sj["detail"] = s.detail;
        sj["known_discrepancy"] = s.known_discrepancy;
        subs.push_back(std::move(sj));
    }
    out["subchecks"] = std::move(subs);
    return out;
}

CheckReport report_from_json(const json& j) {
    CheckReport r;
    r.name = j.at("name").get<std::string>();
    r.N = j.at("N").get<int>();
    r.status = status_from_string(j.at("status").get<std::string>());
    if (!j.at("grid").is_null()) r.grid = grid_from_json(j.at("grid"));
    if (!j.at("residual").is_null()) r.residual = scalar_from_json(j.at("residual"));
    if (!j.at("witness").is_null()) r.witness = witness_from_json(j.at("witness"));
    r.reason = j.at("reason").get<std::string>();
    for (const auto& sj : j.at("subchecks")) {
        SubCheck s;
        s.name = sj.at("name").get<std::string>();
        s.status = status_from_string(sj.at("status").get<std::string>());
        if (!sj.at("residual").is_null()) s.residual = scalar_from_json(sj.at("residual"));
        if (!sj.at("witness").is_null()) s.witness = witness_from_json(sj.at("witness"));
        s.detail = sj.at("detail").get<std::string>();
        s.known_discrepancy = sj.at("known_discrepancy").get<bool>();
        r.subchecks.push_back(std::move(s));
    }
    return r;
}

json to_json(const std::vector<CheckReport>& reports) {
    json out = json::array();
    for (const auto& r : reports) out.push_back(to_json(r));
    return out;
}

}  // namespace sturmion
