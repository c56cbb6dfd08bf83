#include "json_util.hpp"

#include "caqwbh/keyed.hpp"

namespace caqwbh::detail {

using json = nlohmann::ordered_json;

json params_to_json(const HashParams& params, bool include_alpha) {
    json p;
    p["q"] = params.q;
    p["k"] = params.k;
    p["theta1"] = double_to_decimal(params.theta1);
    p["theta2"] = double_to_decimal(params.theta2);
    p["coin1"] = {{"cos", double_to_decimal(params.coin1.c())},
                  {"sin", double_to_decimal(params.coin1.s())}};
    p["coin2"] = {{"cos", double_to_decimal(params.coin2.c())},
                  {"sin", double_to_decimal(params.coin2.s())}};
    if (include_alpha) {
        json alpha = json::array();
        for (const Amplitude& a : params.alpha) {
            alpha.push_back({double_to_decimal(a.real()), double_to_decimal(a.imag())});
        }
        p["alpha"] = std::move(alpha);
    }
    return p;
}

HashParams params_from_json(const json& doc) {
    try {
        HashParams params;
        params.q = doc.at("q").get<unsigned>();
        params.k = doc.at("k").get<unsigned>();
        params.theta1 = decimal_to_double(doc.at("theta1").get<std::string>());
        params.theta2 = decimal_to_double(doc.at("theta2").get<std::string>());
        params.coin1 =
            Coin2::from_cos_sin(decimal_to_double(doc.at("coin1").at("cos")),
                                decimal_to_double(doc.at("coin1").at("sin")));
        params.coin2 =
            Coin2::from_cos_sin(decimal_to_double(doc.at("coin2").at("cos")),
                                decimal_to_double(doc.at("coin2").at("sin")));
        if (doc.contains("alpha")) {
            for (const auto& pair : doc.at("alpha")) {
                params.alpha.emplace_back(decimal_to_double(pair.at(0).get<std::string>()),
                                          decimal_to_double(pair.at(1).get<std::string>()));
            }
        }
        return params;
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad params: ") + e.what());
    }
}

} // namespace caqwbh::detail
