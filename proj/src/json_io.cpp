#include "bv/json_io.hpp"

#include "bv/errors.hpp"

#include <string>

namespace bv {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

BigInt integer_from(const Json& j, const std::string& where) {
    if (j.is_number_float()) bad(where + ": floats are not allowed");
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    bad(where + ": expected an integer");
}

std::size_t index_from(const Json& j, const std::string& where) {
    BigInt v = integer_from(j, where);
    if (v < 0) bad(where + ": expected a nonnegative index");
    return to_size(v);
}

const Json& array_field(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing \"") + key + "\"");
    if (!it->is_array()) bad(std::string("\"") + key + "\" must be an array");
    return *it;
}

IncidenceMatrix matrix_from(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) bad(where + ": matrix must be a nonempty array of rows");
    std::vector<std::vector<BigInt>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) bad(where + ": matrix rows must be arrays");
        auto& out = rows.emplace_back();
        for (const auto& x : row) out.push_back(integer_from(x, where));
    }
    return IncidenceMatrix(Matrix::from_rows(rows));
}

LevelOrder order_from(const Json& j, const IncidenceMatrix& m, const std::string& where) {
    if (j.is_string()) {
        if (j.get<std::string>() != "left-right") bad(where + ": unknown order \"" + j.get<std::string>() + "\"");
        return left_right_level_order(m);
    }
    if (!j.is_array()) bad(where + ": order must be \"left-right\" or per-vertex slot lists");
    LevelOrder out;
    for (const auto& vertex : j) {
        if (!vertex.is_array()) bad(where + ": order entries must be lists of [source, copy] pairs");
        auto& slots = out.emplace_back();
        for (const auto& pair : vertex) {
            if (!pair.is_array() || pair.size() != 2) bad(where + ": slots are [source, copy] pairs");
            slots.push_back(EdgeSlot{index_from(pair[0], where), index_from(pair[1], where)});
        }
    }
    return out;
}

struct ParsedLevel {
    IncidenceMatrix matrix;
    LevelOrder order;
};

ParsedLevel level_from(const Json& j, const std::string& where) {
    if (!j.is_object()) bad(where + ": level entries must be objects");
    auto it = j.find("matrix");
    if (it == j.end()) bad(where + ": missing \"matrix\"");
    IncidenceMatrix m = matrix_from(*it, where);
    auto ord = j.find("order");
    LevelOrder order = ord == j.end() ? left_right_level_order(m) : order_from(*ord, m, where);
    return ParsedLevel{std::move(m), std::move(order)};
}

Json level_json(const IncidenceMatrix& m, const LevelOrder& order) {
    Json out = Json::object();
    out["matrix"] = to_json(m.matrix());
    if (order != left_right_level_order(m)) {
        Json o = Json::array();
        for (const auto& vertex : order) {
            Json slots = Json::array();
            for (const auto& s : vertex) slots.push_back(Json::array({s.source, s.copy}));
            o.push_back(std::move(slots));
        }
        out["order"] = std::move(o);
    }
    return out;
}

}  // namespace

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        bad(std::string("malformed JSON: ") + e.what());
    }
}

OrderedDiagram ordered_diagram_from_json(const Json& j) {
    if (!j.is_object()) bad("diagram JSON must be an object");
    const Json& levels = array_field(j, "levels");
    if (levels.empty()) throw Error(ErrorCode::EmptyInput, "\"levels\" is empty");

    std::vector<IncidenceMatrix> matrices;
    std::vector<LevelOrder> orders;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        auto lv = level_from(levels[i], "level " + std::to_string(i + 1));
        matrices.push_back(std::move(lv.matrix));
        orders.push_back(std::move(lv.order));
    }

    std::vector<IncidenceMatrix> tail;
    std::vector<LevelOrder> tail_orders;
    if (auto it = j.find("tail"); it != j.end()) {
        if (!it->is_object()) bad("\"tail\" must be an object");
        const Json& repeat = array_field(*it, "repeat");
        if (repeat.empty()) throw Error(ErrorCode::EmptyInput, "\"tail.repeat\" is empty");
        for (std::size_t i = 0; i < repeat.size(); ++i) {
            auto lv = level_from(repeat[i], "tail entry " + std::to_string(i));
            tail.push_back(std::move(lv.matrix));
            tail_orders.push_back(std::move(lv.order));
        }
    }

    std::vector<std::string> alphabet;
    if (auto it = j.find("alphabet"); it != j.end()) {
        if (!it->is_array()) bad("\"alphabet\" must be an array of strings");
        for (const auto& s : *it) {
            if (!s.is_string()) bad("\"alphabet\" must be an array of strings");
            alphabet.push_back(s.get<std::string>());
        }
    }

    BratteliDiagram d(std::move(matrices), std::move(tail), std::move(alphabet));
    return OrderedDiagram(std::move(d), std::move(orders), std::move(tail_orders));
}

BratteliDiagram diagram_from_json(const Json& j) { return ordered_diagram_from_json(j).diagram(); }

Json to_json(const OrderedDiagram& ordered) {
    const auto& d = ordered.diagram();
    Json out = Json::object();
    Json levels = Json::array();
    for (std::size_t i = 0; i < d.explicit_levels().size(); ++i)
        levels.push_back(level_json(d.explicit_levels()[i], ordered.explicit_orders()[i]));
    out["levels"] = std::move(levels);
    if (d.has_tail()) {
        Json repeat = Json::array();
        for (std::size_t i = 0; i < d.tail().size(); ++i)
            repeat.push_back(level_json(d.tail()[i], ordered.tail_orders()[i]));
        out["tail"] = Json{{"repeat", std::move(repeat)}};
    }
    if (!d.alphabet().empty()) out["alphabet"] = d.alphabet();
    return out;
}

Json to_json(const BratteliDiagram& diagram) { return to_json(order_left_right(diagram)); }

Json integer_json(const BigInt& v) {
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return Json(static_cast<std::uint64_t>(v));
    return Json(to_int64(v));
}

Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(const IntVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(integer_json(x));
    return out;
}

Json rational_json(const Rational& r) { return to_fraction_string(r); }

Json to_json(const Decision& d) {
    if (d.is_yes()) return "yes";
    if (d.is_no()) return "no";
    return Json{{"unknown", d.explored_depth()}};
}

Json to_json(const Positivity& p) {
    switch (p.kind) {
    case Positivity::Kind::Positive: return "positive";
    case Positivity::Kind::Negative: return "negative";
    case Positivity::Kind::Zero: return "zero";
    case Positivity::Kind::Unknown: break;
    }
    return Json{{"unknown", p.explored_depth}};
}

Json to_json(const SupernaturalNumber& n) {
    Json finite = Json::object();
    for (const auto& [p, k] : n.finite_exponents()) finite[std::to_string(p)] = k;
    Json infinite = Json::array();
    for (auto p : n.infinite_primes()) infinite.push_back(p);
    return Json{{"finite", std::move(finite)}, {"infinite", std::move(infinite)}};
}

Json to_json(const K0Element& g) { return Json{{"level", g.level}, {"vector", to_json(g.vector)}}; }

K0Element k0_element_from_json(const Json& j) {
    if (!j.is_object()) bad("K0 element must be an object {\"level\":n,\"vector\":[...]}");
    auto lv = j.find("level");
    if (lv == j.end()) bad("K0 element: missing \"level\"");
    K0Element g;
    g.level = index_from(*lv, "K0 element level");
    for (const auto& x : array_field(j, "vector")) g.vector.push_back(integer_from(x, "K0 element vector"));
    return g;
}

Json to_json(const PeriodReport& report) {
    Json levels = Json::array();
    for (const auto& e : report.entries) {
        levels.push_back(Json{{"i", e.level},
                              {"p", e.period},
                              {"per", e.per_offsets},
                              {"d", rational_json(e.density)},
                              {"essential", e.essential}});
    }
    Json out = Json::object();
    out["levels"] = std::move(levels);
    out["coverage"] = report.coverage.to_string();
    out["d_estimate"] = rational_json(report.limit_estimate);
    out["uncovered"] = report.uncovered;
    out["regular"] = report.certified_regular.to_string();
    return out;
}

}  // namespace bv
