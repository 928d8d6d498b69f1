#include "qpos/serialize.hpp"

#include <json.hpp>

namespace qpos {

using nlohmann::json;

namespace {

json integer_json(const Integer& x)
{
    if (x.fits_slong_p()) {
        return static_cast<std::int64_t>(x.get_si());
    }
    return x.get_str();
}

const char* verdict(bool pass)
{
    return pass ? "pass" : "fail";
}

json report_body(const IdentityReport& r)
{
    json j = {{"name", r.name},
              {"order", r.order},
              {"lhs_hash", r.lhs_hash},
              {"rhs_hash", r.rhs_hash},
              {"equal", r.equal}};
    j["first_mismatch"] = r.first_mismatch ? json(*r.first_mismatch) : json(nullptr);
    return j;
}

} // namespace

std::string to_json(const PositivityCertificate& cert, int indent)
{
    const auto& t = cert.params.triple;
    json per_k = json::array();
    for (const KCheck& c : cert.checked) {
        per_k.push_back({{"k", c.k},
                         {"L", c.L},
                         {"N", c.N},
                         {"min_coeff", integer_json(c.min_coeff)},
                         {"min_at", c.min_at}});
    }
    json doc = {
        {"kind", "positivity_certificate"},
        {"family",
         {{"a", t.a()},
          {"b", t.b()},
          {"c", t.c()},
          {"A", to_string(cert.params.form.A())},
          {"B", to_string(cert.params.form.B())}}},
        {"D", to_string(cert.params.D)},
        {"K", cert.thresholds.K},
        {"per_k", per_k},
        {"sample",
         {{"k_range", {cert.sample.k_first, cert.sample.k_last}},
          {"T", cert.sample.T},
          {"pass", cert.sample.pass}}},
        {"verdict", verdict(cert.pass)},
    };
    return doc.dump(indent);
}

std::string to_json(const IdentityReport& report, int indent)
{
    json doc = report_body(report);
    doc["kind"] = "identity_report";
    doc["verdict"] = verdict(report.equal);
    return doc.dump(indent);
}

std::string to_json(std::span<const IdentityReport> reports, int indent)
{
    json items = json::array();
    bool all = true;
    for (const auto& r : reports) {
        items.push_back(report_body(r));
        all = all && r.equal;
    }
    json doc = {{"kind", "identity_suite"}, {"reports", items}, {"verdict", verdict(all)}};
    return doc.dump(indent);
}

std::string to_json(const MercaCertificate& cert, int indent)
{
    json doc = {{"kind", "merca_certificate"},
                {"which", cert.which},
                {"k", cert.k},
                {"T", cert.T},
                {"min_coeff", integer_json(cert.min_coeff)},
                {"min_at", cert.min_at},
                {"nonnegative", cert.nonnegative},
                {"route_T", cert.route_T},
                {"routes_equal", cert.routes_equal},
                {"verdict", verdict(cert.pass)}};
    doc["route_mismatch"] = cert.route_mismatch ? json(*cert.route_mismatch) : json(nullptr);
    return doc.dump(indent);
}

std::string to_json(const PeriodicDecomposition& d, int indent)
{
    json beta = json::array();
    for (const auto& b : d.beta_table) {
        beta.push_back(to_string(b));
    }
    json doc = {{"kind", "periodic_decomposition"},
                {"triple", {d.triple.a(), d.triple.b(), d.triple.c()}},
                {"period", d.period},
                {"period_verified", true},
                {"D", to_string(d.D)},
                {"beta", beta},
                {"verdict", "pass"}};
    return doc.dump(indent);
}

std::string to_json(const CoprimeTuple45& tuple, const RemainderCheck& check, int indent)
{
    json parts = json::array();
    for (auto p : tuple.parts()) {
        parts.push_back(p);
    }
    json doc = {{"kind", "remainder_check"},
                {"parts", parts},
                {"period", check.period},
                {"period_verified", check.periodic},
                {"max_abs_remainder", to_string(check.max_abs)},
                {"remainder_at_zero", to_string(check.at_zero)},
                {"verdict", verdict(check.periodic)}};
    return doc.dump(indent);
}

} // namespace qpos
