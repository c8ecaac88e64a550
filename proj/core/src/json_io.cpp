#include "neurideal/json_io.hpp"

#include "json.hpp"
#include "neurideal/text_format.hpp"

namespace neurideal {

std::string betti_table_json(const BettiTable& table, int indent) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["fine"] = ordered_json::array();
    for (const auto& [key, rank] : table.fine())
        j["fine"].push_back({{"i", key.i}, {"b", to_string(key.b)}, {"rank", rank}});
    j["coarse"] = ordered_json::array();
    for (const auto& [key, rank] : table.coarse())
        j["coarse"].push_back({{"i", key.first}, {"j", key.second}, {"rank", rank}});
    j["pd"] = table.pd();
    j["reg"] = table.reg();
    return j.dump(indent);
}

BettiTable parse_betti_table_json(std::string_view text, int n) {
    try {
        const auto j = nlohmann::json::parse(text);
        FineBetti fine;
        for (const auto& e : j.at("fine")) {
            const Monomial b = parse_monomial(e.at("b").get<std::string>(), n);
            fine[FineKey{e.at("i").get<int>(), b}] = e.at("rank").get<std::size_t>();
        }
        BettiTable table(n, std::move(fine));
        for (const auto& e : j.at("coarse")) {
            if (table.coarse_at(e.at("i").get<int>(), e.at("j").get<int>()) != e.at("rank").get<std::size_t>()) {
                throw ParseError(0, "coarse entries disagree with the fine table");
            }
        }
        if (j.at("pd").get<int>() != table.pd() || j.at("reg").get<int>() != table.reg()) {
            throw ParseError(0, "pd/reg disagree with the fine table");
        }
        return table;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("malformed Betti table JSON: ") + e.what());
    }
}

}  // namespace neurideal
