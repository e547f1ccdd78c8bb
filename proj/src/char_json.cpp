#include "inccoh/char_json.hpp"

#include "inccoh/errors.hpp"

#include <limits>
#include <string>

namespace inccoh {

nlohmann::ordered_json coeff_to_json(const Coeff& c)
{
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c);
    return c.str();
}

nlohmann::ordered_json weight_to_json(const Weight& w)
{
    auto arr = nlohmann::ordered_json::array();
    for (Exponent x : w.exps())
        arr.push_back(x);
    return arr;
}

nlohmann::ordered_json to_json(const Character& f)
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [w, c] : f.terms())
        arr.push_back({{"exp", weight_to_json(w)}, {"coeff", coeff_to_json(c)}});
    return arr;
}

Character character_from_json(const nlohmann::ordered_json& j, int n)
{
    if (!j.is_array())
        throw InvalidArgument("character JSON must be an array");
    Character f(n);
    for (const auto& term : j) {
        const auto& exp = term.at("exp");
        std::vector<Exponent> v;
        for (const auto& x : exp)
            v.push_back(x.get<Exponent>());
        if (static_cast<int>(v.size()) != n)
            throw DimensionMismatch("exponent vector length does not match n");
        const auto& cj = term.at("coeff");
        Coeff c = cj.is_string() ? Coeff(cj.get<std::string>()) : Coeff(cj.get<std::int64_t>());
        f.add_term(Weight::normalize(v), c);
    }
    return f;
}

} // namespace inccoh
