#include "penney/json_io.hpp"

namespace penney {

std::string approx15(const Rat& q) { return rat_to_decimal_sig(q, 15); }

Json rat_json(const Rat& q) { return Json{{"exact", rat_to_string(q)}, {"approx", approx15(q)}}; }

Json zpoly_json(const ZPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    return coeffs;
}

ZPoly zpoly_from_json(const Json& j) {
    std::vector<Int> coeffs;
    for (const auto& c : j) coeffs.emplace_back(c.get<std::string>());
    return ZPoly(std::move(coeffs));
}

Json algebraic_json(const AlgebraicNumber& a) {
    return Json{{"minpoly", zpoly_json(a.minpoly())},
                {"lo", rat_to_string(a.lo())},
                {"hi", rat_to_string(a.hi())},
                {"approx", a.approx_decimal(15)}};
}

AlgebraicNumber algebraic_from_json(const Json& j) {
    return AlgebraicNumber(zpoly_from_json(j.at("minpoly")),
                           rat_from_string(j.at("lo").get<std::string>()),
                           rat_from_string(j.at("hi").get<std::string>()));
}

Json ratfunc_json(const RatFunc& f) {
    return Json{{"num", zpoly_json(f.num())}, {"den", zpoly_json(f.den())}};
}

Json race_result_json(const RaceResult& r, TieConvention conv) {
    Rat first = r.first_wins(conv);
    Rat second;
    switch (conv) {
        case TieConvention::Strict: second = r.p_second_strict; break;
        case TieConvention::FavourFirst: second = r.p_second_strict; break;
        default: second = Rat(r.p_second_strict + r.p_tie / 2); break;
    }
    Json j{{"first", rat_to_string(first)},
           {"second", rat_to_string(second)},
           {"tie", rat_to_string(r.p_tie)},
           {"strict_first", rat_to_string(r.p_first_strict)},
           {"strict_second", rat_to_string(r.p_second_strict)},
           {"convention", tie_to_string(conv)},
           {"approx",
            Json{{"first", approx15(first)},
                 {"second", approx15(second)},
                 {"tie", approx15(r.p_tie)}}}};
    return j;
}

}  // namespace penney
