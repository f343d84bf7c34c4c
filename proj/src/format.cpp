#include "nsg/format.hpp"

namespace nsg {

using nlohmann::json;

std::string monomial_string(Int e, std::span<const Int> k) {
    std::string out;
    auto append = [&](std::size_t var, Int exp) {
        if (exp == 0) return;
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(var);
        if (exp != 1) {
            out += '^';
            out += std::to_string(exp);
        }
    };
    append(1, e);
    for (std::size_t i = 0; i < k.size(); ++i) append(i + 2, k[i]);
    return out.empty() ? "1" : out;
}

std::string monomial_string(std::span<const Int> k) {
    return monomial_string(0, k);
}

std::string binomial_string(const Binomial& b) {
    return monomial_string(b.lead.exps) + " - " +
           monomial_string(b.tail_param_exp, b.tail_witness.exps);
}

json monomial_json(std::span<const Int> k) {
    return json{{"exponents", std::vector<Int>(k.begin(), k.end())},
                {"monomial", monomial_string(k)}};
}

json monomial_json(Int e, std::span<const Int> k) {
    return json{{"x1_exponent", e},
                {"exponents", std::vector<Int>(k.begin(), k.end())},
                {"monomial", monomial_string(e, k)}};
}

json to_json(const ExponentVector& v) { return monomial_json(v.exps); }

json to_json(const GeneratorSet& g) {
    return json{{"raw", g.raw},
                {"sorted", g.sorted},
                {"reduced", g.reduced},
                {"lambda", g.lambda},
                {"param_index", g.param_index},
                {"parameter", g.param()}};
}

json to_json(const Binomial& b) {
    return json{{"lead", monomial_json(b.lead.exps)},
                {"e", b.tail_param_exp},
                {"tail", monomial_json(b.tail_param_exp, b.tail_witness.exps)},
                {"binomial", binomial_string(b)}};
}

json to_json(const AperyTable& t) {
    json entries = json::array();
    for (Int r = 0; r < t.base; ++r) {
        entries.push_back(json{{"residue", r},
                               {"value", t.scaled_value(r)},
                               {"witness", monomial_json(t.witness(r))}});
    }
    return json{{"base", t.base},
                {"lambda", t.lambda},
                {"levels_scanned", t.levels_scanned},
                {"entries", std::move(entries)}};
}

json to_json(const HilbertSeries& h) {
    return json{{"numerator_exponents", h.numerator_exponents},
                {"denominator_exponent", h.denominator_exponent},
                {"degree", h.degree}};
}

json to_json(const MembershipCertificate& c) {
    json j{{"member", c.member}};
    if (c.member)
        j["representation"] = c.representation;
    else
        j["blocking"] = c.blocking ? json(*c.blocking) : json(nullptr);
    return j;
}

json to_json(const StaircaseReport& r) {
    json standard = json::array();
    for (const auto& m : r.standard) standard.push_back(monomial_json(m.exps));
    json gens = json::array();
    for (const auto& m : r.generators) gens.push_back(monomial_json(m.exps));
    return json{{"standard", std::move(standard)},
                {"generators", std::move(gens)},
                {"max_standard_totaldeg", r.max_standard_totaldeg}};
}

json to_json(const Euclid3Table& t) {
    return json{{"a", t.a},     {"b", t.b}, {"c", t.c}, {"q", t.q},
                {"s", t.s},     {"p", t.p}, {"r", t.r}, {"mu", t.mu}};
}

json to_json(const oracle::VerificationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(
            json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return json{{"checks", std::move(checks)}, {"overall", r.overall}};
}

}  // namespace nsg
