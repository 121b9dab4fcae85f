#include "skelcollar/exact/poly_json.hpp"

#include "skelcollar/error.hpp"

namespace skelcollar::exact {

nlohmann::json rational_to_json(const Rational& r) {
    return {{"num", r.numerator().get_str()}, {"den", r.denominator().get_str()}};
}

nlohmann::json poly_to_json(const LaurentPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back({{"exp", e},
                         {"num", c.numerator().get_str()},
                         {"den", c.denominator().get_str()}});
    }
    return {{"vars", p.variables()}, {"terms", terms}};
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
    try {
        const auto vars = j.at("vars").get<std::vector<std::string>>();
        std::vector<std::pair<Exponent, Rational>> terms;
        for (const auto& t : j.at("terms")) {
            auto e = t.at("exp").get<Exponent>();
            const auto num = t.at("num").get<std::string>();
            const auto den = t.contains("den") ? t.at("den").get<std::string>() : std::string("1");
            const Rational n = Rational::parse(num);
            const Rational d = Rational::parse(den);
            if (!n.is_integer() || !d.is_integer() || d.is_zero()) {
                throw Error(Errc::ParseError, "term coefficient must be integer num/den");
            }
            terms.emplace_back(std::move(e), n / d);
        }
        return LaurentPoly::from_terms(vars, terms);
    } catch (const nlohmann::json::exception& ex) {
        throw Error(Errc::ParseError, ex.what());
    } catch (const Error& ex) {
        if (ex.code() == Errc::ParseError) throw;
        throw Error(Errc::ParseError, ex.what());
    }
}

}  // namespace skelcollar::exact
