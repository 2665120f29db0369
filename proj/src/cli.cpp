#include "bv/cli.hpp"

#include "bv/arith.hpp"
#include "bv/errors.hpp"
#include "bv/json_io.hpp"
#include "bv/k0.hpp"
#include "bv/realization.hpp"
#include "bv/toeplitz.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace bv::cli {

namespace {

struct Options {
    std::string input;
    std::string out_path;
    std::string format;
    std::optional<std::size_t> radius;
    std::optional<std::size_t> depth;
    std::optional<std::size_t> level;
    std::optional<std::size_t> m;
    std::optional<std::size_t> vertex;
    std::string p;
    std::string rank;
    std::string cuts;
    std::string coeffs;
    std::string l_list, k_list, q_list, r_list;
    std::string base;
    std::string tail_list;
    std::string vector;
    bool repeat = false;
};

struct Outcome {
    Outcome(Json r, int c = kOk) : report(std::move(r)), code(c) {}

    Json report;
    int code = kOk;
    std::string text;  // preformatted text output, if the command has one
};

std::size_t unroll_limit_from_env() {
    const char* raw = std::getenv("BV_MAX_UNROLL");
    if (raw == nullptr || *raw == '\0') return kDefaultMaxUnroll;
    BigInt v;
    try {
        v = BigInt(std::string(raw));
    } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidInput, "BV_MAX_UNROLL must be a positive integer");
    }
    if (v < 1) throw Error(ErrorCode::InvalidInput, "BV_MAX_UNROLL must be a positive integer");
    return to_size(v);
}

std::string read_input(const std::string& source) {
    if (source.empty()) throw Error(ErrorCode::InvalidInput, "no input given (-i FILE, -i -, or inline JSON)");
    const auto first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && source[first] == '{') return source;
    if (source == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(source, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + source);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

OrderedDiagram load_diagram(const Options& o) {
    OrderedDiagram d = ordered_diagram_from_json(parse_json_text(read_input(o.input)));
    return OrderedDiagram(d.diagram().with_unroll_limit(unroll_limit_from_env()), d.explicit_orders(),
                          d.tail_orders());
}

std::vector<BigInt> int_list(const std::string& text, const char* flag) {
    if (text.empty()) throw Error(ErrorCode::InvalidInput, std::string("missing ") + flag);
    return parse_int_list(text);
}

K0Element element_from(const Options& o) {
    if (o.vector.empty()) {
        if (o.level && *o.level != 0) throw Error(ErrorCode::InvalidInput, "--level needs --vector");
        return K0Element::unit();
    }
    return K0Element{o.level.value_or(0), parse_int_list(o.vector)};
}

Json rational_list(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(rational_json(x));
    return out;
}

// nlohmann prints the shortest round-trip form, so a value rounded to 12
// significant digits prints with at most 12.
double round12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

Outcome cmd_validate(const Options& o) {
    const auto ordered = load_diagram(o);
    const auto& d = ordered.diagram();
    const std::size_t depth = o.depth.value_or(8);
    Json vertices = Json::array();
    for (std::size_t n = 0; n <= d.explicit_levels().size(); ++n) vertices.push_back(d.vertex_count(n));
    Json r = Json::object();
    r["valid"] = true;
    r["explicit_levels"] = d.explicit_levels().size();
    r["tail_period"] = d.tail().size();
    r["vertices"] = std::move(vertices);
    r["first_level_edges"] = d.first_level_edges();
    r["ers"] = is_ers(d);
    r["simple"] = to_json(is_simple(d, depth));
    r["properly_ordered"] = to_json(is_properly_ordered(ordered, depth));
    return {r};
}

Outcome cmd_telescope(const Options& o) {
    const auto ordered = load_diagram(o);
    std::vector<std::size_t> cuts;
    for (const auto& c : int_list(o.cuts, "--cuts")) {
        if (c < 0) throw Error(ErrorCode::CutsOutOfRange, "cuts must be nonnegative");
        cuts.push_back(to_size(c));
    }
    return {to_json(telescope(ordered.diagram(), cuts))};
}

Outcome cmd_ers(const Options& o) {
    const auto ordered = load_diagram(o);
    const auto& d = ordered.diagram();
    const std::size_t depth = o.depth.value_or(d.explicit_levels().size() + d.tail().size());
    const auto rep = ers_row_sums(d, depth);
    Json r = Json::object();
    r["ers"] = rep.is_ers();
    r["row_sums"] = rep.row_sums ? to_json(*rep.row_sums) : Json(nullptr);
    r["violation_level"] = rep.violation_level ? Json(*rep.violation_level) : Json(nullptr);
    r["certified"] = rep.certified_all_levels;
    if (rep.is_ers() && rep.certified_all_levels && d.has_tail()) r["supernatural"] = to_json(supernatural_of(d));
    return {r};
}

Outcome cmd_toeplitz_gen(const Options& o) {
    if (!o.radius) throw Error(ErrorCode::InvalidInput, "missing -N");
    const auto ordered = load_diagram(o);
    const auto w = generate_window(ordered, *o.radius, o.depth.value_or(kDefaultOrderDepth));
    const std::string s = render(ordered.diagram(), w.symbols);
    Outcome res{Json{{"offset", w.offset}, {"window", s}}};
    res.text = "offset " + std::to_string(w.offset) + "\n" + s + "\n";
    return res;
}

Outcome cmd_toeplitz_analyze(const Options& o) {
    const auto ordered = load_diagram(o);
    const auto rep = periodic_structure(ordered, o.depth.value_or(6));
    Json r = to_json(rep);
    if (o.radius)
        r["window_coverage"] = rational_json(verify_toeplitz_window(ordered, *o.radius, o.depth.value_or(6)));
    return {r, rep.coverage.is_unknown() ? kUndecided : kOk};
}

Outcome cmd_entropy(const Options& o) {
    if (!o.radius) throw Error(ErrorCode::InvalidInput, "missing -N");
    if (!o.m) throw Error(ErrorCode::InvalidInput, "missing -m");
    const auto ordered = load_diagram(o);
    const auto w = generate_window(ordered, *o.radius);
    Json r = Json::object();
    r["m"] = *o.m;
    r["complexity"] = word_complexity(w, *o.m);
    r["empirical_entropy"] = round12(empirical_entropy(w, *o.m));
    if (o.level) {
        const auto b = entropy_upper_bound(ordered, *o.level, *o.m);
        r["bound"] = Json{{"level", *o.level},
                          {"towers", b.towers},
                          {"shortest", integer_json(b.shortest)},
                          {"longest", integer_json(b.longest)},
                          {"exponent", rational_json(b.exponent)},
                          {"log_k_coefficient", rational_json(b.log_k_coefficient)},
                          {"offset_aware_count", b.offset_aware_count.str()}};
    }
    return {r};
}

Outcome cmd_k0_gamma(const Options& o) {
    const auto ordered = load_diagram(o);
    const auto& d = ordered.diagram();
    const auto g = element_from(o);
    const auto res = gamma_rational(d, g, o.depth.value_or(16));
    Json r = Json::object();
    r["element"] = to_json(g);
    r["gamma"] = res.value ? rational_json(*res.value) : Json{{"unknown", res.explored_depth}};
    r["resolved_level"] = res.resolved_level ? Json(*res.resolved_level) : Json(nullptr);
    return {r, res.value ? kOk : kUndecided};
}

Outcome cmd_k0_positivity(const Options& o) {
    const auto ordered = load_diagram(o);
    const auto& d = ordered.diagram();
    const auto g = element_from(o);
    const auto pos = k0_positivity(d, g, o.depth.value_or(16));
    Json r = Json::object();
    r["element"] = to_json(g);
    r["positivity"] = to_json(pos);
    return {r, pos.kind == Positivity::Kind::Unknown ? kUndecided : kOk};
}

Outcome cmd_k0_eigen(const Options& o) {
    if (o.p.empty()) throw Error(ErrorCode::InvalidInput, "missing -p");
    const auto ordered = load_diagram(o);
    const auto& d = ordered.diagram();
    return {Json{{"eigenvalue", eigenvalue_test(d, BigInt(o.p))}}};
}

Outcome cmd_factor(const Options& o) {
    const auto ordered = load_diagram(o);
    Json r = Json::object();
    if (ordered.diagram().has_tail()) {
        const auto f = max_equicontinuous_factor(ordered.diagram());
        r["supernatural"] = to_json(f.odometer);
        r["odometer"] = f.odometer.to_string();
        r["eigenvalues"] = f.description();
    }
    if (o.level) {
        const BigInt rank = o.rank.empty() ? BigInt(0) : BigInt(o.rank);
        const auto path = path_of_rank(ordered, PathRank{*o.level, o.vertex.value_or(0), rank});
        r["digits"] = factor_to_odometer(ordered, path);
    } else if (!ordered.diagram().has_tail()) {
        throw Error(ErrorCode::NoTail, "factor needs a tail, or --level/--rank for a digit readout");
    }
    return {r};
}

Outcome cmd_realize_cf(const Options& o) {
    const auto cf = cf_to_ers(int_list(o.coeffs, "--coeffs"));
    Json r = to_json(cf.diagram());
    Json b = Json::array(), k = Json::array(), m = Json::array(), j = Json::array(), jp = Json::array();
    for (std::size_t n = 2; n <= cf.level_count(); ++n) {
        b.push_back(to_json(cf.B(n)));
        k.push_back(integer_json(cf.k(n)));
        m.push_back(integer_json(cf.m(n)));
        j.push_back(rational_list(cf.J(n)));
        jp.push_back(rational_list(cf.J_prime(n)));
    }
    Json a = Json::array();
    for (std::size_t n = 1; n <= cf.level_count(); ++n) a.push_back(to_json(cf.A(n)));
    r["provenance"] = Json{{"coefficients", to_json(cf.coefficients())},
                           {"A", std::move(a)},
                           {"B", std::move(b)},
                           {"k", std::move(k)},
                           {"m", std::move(m)},
                           {"J", std::move(j)},
                           {"Jprime", std::move(jp)}};
    return {r};
}

TwoSymmetricSpec twosym_spec(const Options& o) {
    const bool lk = !o.l_list.empty() || !o.k_list.empty();
    const bool qr = !o.q_list.empty() || !o.r_list.empty();
    if (lk == qr) throw Error(ErrorCode::InvalidInput, "give either --l/--k or --q/--r");
    if (qr) return TwoSymmetricSpec::from_qr(int_list(o.q_list, "--q"), int_list(o.r_list, "--r"), o.repeat);
    const auto l = int_list(o.l_list, "--l");
    const auto k = int_list(o.k_list, "--k");
    if (l.size() != k.size()) throw Error(ErrorCode::InvalidPairs, "--l and --k differ in length");
    std::vector<TwoSymmetricSpec::Pair> pairs;
    for (std::size_t i = 0; i < l.size(); ++i) pairs.emplace_back(l[i], k[i]);
    return o.repeat ? TwoSymmetricSpec({}, std::move(pairs)) : TwoSymmetricSpec(std::move(pairs));
}

Outcome cmd_realize_twosym(const Options& o) {
    const auto spec = twosym_spec(o);
    Json r = to_json(two_symmetric(spec));
    const std::size_t n = o.level.value_or(std::max<std::size_t>(2, spec.prefix().size() + spec.tail().size() + 1));
    Json pairs = Json::array(), q = Json::array(), rr = Json::array();
    for (std::size_t i = 2; i <= n; ++i) {
        const auto& p = spec.pair(i);
        pairs.push_back(Json::array({integer_json(p.first), integer_json(p.second)}));
        q.push_back(integer_json(spec.q(i)));
        rr.push_back(integer_json(spec.r(i)));
    }
    const auto alpha = two_symmetric_alpha(spec, n);
    Json prov = Json::object();
    prov["level"] = n;
    prov["pairs"] = std::move(pairs);
    prov["q"] = std::move(q);
    prov["r"] = std::move(rr);
    prov["product"] = to_json(two_symmetric_product(spec, n));
    prov["alpha"] = Json{{"partial_product", rational_json(alpha.partial_product)},
                         {"reciprocal", rational_json(alpha.reciprocal)},
                         {"classification", alpha.classification_string()}};
    if (!o.vector.empty()) {
        const K0Element g{o.level.value_or(0), parse_int_list(o.vector)};
        prov["tau"] = Json{{"element", to_json(g)}, {"value", rational_json(two_symmetric_tau(spec, g))}};
    }
    r["provenance"] = std::move(prov);
    return {r};
}

Outcome cmd_odometer(const Options& o) {
    std::vector<BigInt> prefix = o.base.empty() ? std::vector<BigInt>{} : parse_int_list(o.base);
    std::vector<BigInt> tail = o.tail_list.empty() ? std::vector<BigInt>{} : parse_int_list(o.tail_list);
    return {to_json(odometer_diagram(prefix, tail))};
}

void write_text(const Json& j, std::ostream& os) {
    for (const auto& [key, value] : j.items())
        os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

using Handler = std::function<Outcome(const Options&)>;

CLI::App* add_command(CLI::App& parent, const std::string& name, const std::string& help, Options& o,
                      bool diagram_input) {
    auto* sub = parent.add_subcommand(name, help);
    if (diagram_input) sub->add_option("-i,--input", o.input, "diagram JSON file, - for stdin, or inline JSON");
    sub->add_option("-o,--out", o.out_path, "write the report here instead of stdout");
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    return sub;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Bratteli-Vershik diagrams, Toeplitz windows and dimension-group data"};
    app.require_subcommand(1);

    std::vector<std::pair<CLI::App*, Handler>> commands;
    auto reg = [&](CLI::App* sub, Handler h) {
        commands.emplace_back(sub, std::move(h));
        return sub;
    };

    reg(add_command(app, "validate", "check a diagram and summarize it", o, true), cmd_validate)
        ->add_option("--depth", o.depth, "window for simplicity / proper-order checks");
    reg(add_command(app, "telescope", "telescope to the given levels", o, true), cmd_telescope)
        ->add_option("--cuts", o.cuts, "increasing levels, e.g. 0,2,4")
        ->required();
    reg(add_command(app, "ers", "row sums and supernatural number", o, true), cmd_ers)
        ->add_option("--depth", o.depth, "levels to check");
    {
        auto* s = reg(add_command(app, "toeplitz-gen", "Toeplitz window on [-N, N]", o, true), cmd_toeplitz_gen);
        s->add_option("-N", o.radius, "window radius");
        s->add_option("--depth", o.depth, "proper-ordering certificate depth");
    }
    {
        auto* s = reg(add_command(app, "toeplitz-analyze", "periodic structure", o, true), cmd_toeplitz_analyze);
        s->add_option("--depth", o.depth, "number of levels");
        s->add_option("-N", o.radius, "also check a window of this radius");
    }
    {
        auto* s = reg(add_command(app, "entropy", "word complexity and entropy bound", o, true), cmd_entropy);
        s->add_option("-N", o.radius, "window radius");
        s->add_option("-m", o.m, "factor length");
        s->add_option("--level", o.level, "level for the upper bound");
    }
    for (auto [name, handler] : {std::pair<const char*, Handler>{"k0-gamma", cmd_k0_gamma},
                                 std::pair<const char*, Handler>{"k0-positivity", cmd_k0_positivity}}) {
        auto* s = reg(add_command(app, name, "K0 element query", o, true), handler);
        s->add_option("--level", o.level, "element level (default 0)");
        s->add_option("--vector", o.vector, "element vector, e.g. 1,-1 (default: the order unit)");
        s->add_option("--depth", o.depth, "levels to push forward");
    }
    reg(add_command(app, "k0-eigen", "is exp(2 pi i / p) an eigenvalue", o, true), cmd_k0_eigen)
        ->add_option("-p", o.p, "integer p >= 2");
    {
        auto* s = reg(add_command(app, "factor", "maximal equicontinuous factor / odometer digits", o, true),
                      cmd_factor);
        s->add_option("--level", o.level, "path level for a digit readout");
        s->add_option("--vertex", o.vertex, "terminal vertex (default 0)");
        s->add_option("--rank", o.rank, "path rank in its tower (default 0)");
    }
    auto add_cf = [&](CLI::App& parent, const std::string& name) {
        reg(add_command(parent, name, "continued-fraction ERS realization", o, false), cmd_realize_cf)
            ->add_option("--coeffs", o.coeffs, "a_0,a_1,...,a_T with a_0 = 1");
    };
    auto add_twosym = [&](CLI::App& parent, const std::string& name) {
        auto* s = reg(add_command(parent, name, "2-symmetric diagram", o, false), cmd_realize_twosym);
        s->add_option("--l", o.l_list, "l_2,l_3,...");
        s->add_option("--k", o.k_list, "k_2,k_3,...");
        s->add_option("--q", o.q_list, "q_2,q_3,...");
        s->add_option("--r", o.r_list, "r_2,r_3,...");
        s->add_flag("--tail", o.repeat, "the pairs repeat forever");
        s->add_option("--level", o.level, "level for alpha and tau");
        s->add_option("--vector", o.vector, "element for tau at --level");
    };
    add_cf(app, "realize-cf");
    add_twosym(app, "realize-twosym");
    auto* realize = app.add_subcommand("realize", "realization families");
    realize->require_subcommand(1);
    add_cf(*realize, "cf");
    add_twosym(*realize, "twosym");
    {
        auto* s = reg(add_command(app, "odometer", "single-vertex diagram", o, false), cmd_odometer);
        s->add_option("--base", o.base, "prefix bases, e.g. 2,3");
        s->add_option("--tail", o.tail_list, "bases repeated forever");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }

    try {
        for (const auto& [sub, handler] : commands) {
            if (!sub->parsed()) continue;
            Outcome res = handler(o);
            std::ostringstream buf;
            const bool text = o.format == "text" || (o.format.empty() && !res.text.empty());
            if (text && !res.text.empty()) {
                buf << res.text;
            } else if (text) {
                write_text(res.report, buf);
            } else {
                buf << res.report.dump() << '\n';
            }
            if (o.out_path.empty()) {
                out << buf.str();
            } else {
                std::ofstream f(o.out_path, std::ios::binary);
                if (!(f << buf.str())) throw Error(ErrorCode::InvalidInput, "cannot write " + o.out_path);
            }
            return res.code;
        }
        err << "error: no subcommand\n";
        return kInvalidInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        if (is_internal(e.code())) return kInternal;
        if (e.decision() && e.decision()->is_unknown()) return kUndecided;
        return kInvalidInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

}  // namespace bv::cli
