#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gyro/gyro.hpp"

namespace gyro::cli {

enum exit_code : int { ok = 0, verification_failure = 1, input_error = 2 };

using Model = std::variant<EinsteinModel<3>, EinsteinModel<2>, MobiusModel, FiniteTable>;

struct Options {
    std::string command;
    std::string model;
    std::string subset;
    std::string inner;
    std::vector<std::string> chains;
    unsigned depth = 10;
    std::optional<std::size_t> samples;
    std::uint64_t seed = 0;
    std::optional<double> eps;
    std::string out;
    std::string pairs;
    bool quotient = false;
};

/// Collects report lines; emitted sorted by check name, ties in insertion order.
class Report {
public:
    explicit Report(nlohmann::json context) : context_(std::move(context)) {}

    void add(nlohmann::json line) {
        if (line.contains("verdict") && line["verdict"] == "fail") failed_ = true;
        nlohmann::json full = context_;
        full.update(line);
        lines_.push_back(std::move(full));
    }

    template <typename E>
    void add(const CheckResult<E>& c) { add(to_json(c)); }

    template <typename E>
    void add(const AxiomReport<E>& r) {
        for (const auto& c : r.checks) add(c);
    }

    template <typename E>
    void add_verdict(const std::string& name, const Verdict<E>& v) {
        nlohmann::json w = nlohmann::json::array();
        if (!v.holds) {
            auto els = nlohmann::json::array();
            for (const auto& e : v.witness) els.push_back(element_to_json(e));
            w.push_back({{"elements", els}, {"residual", 1.0}});
        }
        add({{"check", name}, {"verdict", v.holds ? "pass" : "fail"}, {"reason", v.reason}, {"witnesses", w}});
    }

    template <typename E>
    void add_chain_verdict(const std::string& name, const ChainVerdict<E>& v) {
        nlohmann::json line{{"check", name}, {"verdict", v.valid ? "pass" : "fail"}, {"reason", v.reason}};
        line["depth"] = v.index ? nlohmann::json(*v.index) : nlohmann::json(nullptr);
        auto els = nlohmann::json::array();
        for (const auto& e : v.witness) els.push_back(element_to_json(e));
        line["witnesses"] = v.valid ? nlohmann::json::array() : nlohmann::json::array({{{"elements", els}, {"residual", 1.0}}});
        add(std::move(line));
    }

    bool failed() const { return failed_; }

    void write(std::ostream& out) const {
        auto sorted = lines_;
        std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
            return a.at("check").template get<std::string>() < b.at("check").template get<std::string>();
        });
        for (const auto& l : sorted) out << l.dump() << '\n';
    }

private:
    nlohmann::json context_;
    std::vector<nlohmann::json> lines_;
    bool failed_ = false;
};

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(item);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

inline std::size_t parse_index(const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); }))
        throw parse_error("expected an element index, got '" + s + "'");
    return std::stoull(s);
}

inline double parse_real(const std::string& s) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw parse_error("expected a real number, got '" + s + "'");
    }
    if (pos != s.size()) throw parse_error("expected a real number, got '" + s + "'");
    return v;
}

inline ElementSet parse_finite_subset(const FiniteTable& g, const std::string& text) {
    if (text.empty()) throw parse_error("--subset is required for this command");
    ElementSet s(g.order());
    for (const auto& item : split(text, ',')) {
        const auto x = parse_index(item);
        if (!g.contains(x)) throw parse_error("subset element " + item + " is outside the model");
        s.insert(x);
    }
    return s;
}

/// "axis:<i>", "axis:x|y|z" or "ball:<r>".
inline ContinuousSubset parse_continuous_subset(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw parse_error("continuous subset must be axis:<i> or ball:<r>, got '" + text + "'");
    const auto kind = text.substr(0, colon);
    const auto arg = text.substr(colon + 1);
    if (kind == "axis") {
        if (arg == "x" || arg == "y" || arg == "z") return ContinuousSubset::axis(static_cast<std::size_t>(arg[0] - 'x'));
        return ContinuousSubset::axis(parse_index(arg));
    }
    if (kind == "ball") return ContinuousSubset::ball(parse_real(arg));
    throw parse_error("unknown subset kind '" + kind + "'");
}

template <typename M>
element_t<M> parse_element(const M& m, const std::string& text) {
    using E = element_t<M>;
    if constexpr (std::is_same_v<M, FiniteTable>) {
        const auto x = parse_index(text);
        if (!m.contains(x)) throw parse_error("element " + text + " is outside the model");
        return x;
    } else {
        if (text == "0") return m.identity();
        const auto parts = split(text, ',');
        E x{};
        if constexpr (std::is_same_v<E, std::complex<double>>) {
            if (parts.size() != 2) throw parse_error("Möbius elements take 2 coordinates, got '" + text + "'");
            x = {parse_real(parts[0]), parse_real(parts[1])};
        } else {
            if (parts.size() != x.size())
                throw parse_error("expected " + std::to_string(x.size()) + " coordinates, got '" + text + "'");
            for (std::size_t i = 0; i < x.size(); ++i) x[i] = parse_real(parts[i]);
        }
        if (!m.contains(x)) throw carrier_error("element '" + text + "' lies outside the open ball");
        return x;
    }
}

/// Finite pairs are "x:y,x:y"; continuous pairs are "x:y;x:y" with comma-separated coordinates.
template <typename M>
std::vector<std::pair<element_t<M>, element_t<M>>> parse_pairs(const M& m, const std::string& text) {
    std::vector<std::pair<element_t<M>, element_t<M>>> out;
    if (text.empty()) return out;
    const char sep = std::is_same_v<M, FiniteTable> ? ',' : ';';
    for (const auto& item : split(text, sep)) {
        const auto parts = split(item, ':');
        if (parts.size() != 2) throw parse_error("pair must be x:y, got '" + item + "'");
        out.emplace_back(parse_element(m, parts[0]), parse_element(m, parts[1]));
    }
    return out;
}

inline nlohmann::json dyadic_json(Dyadic d) { return d.to_string(); }

inline nlohmann::json set_json(const ElementSet& s) { return s.elements(); }

inline SampleSpec sample_spec(const Options& o, std::size_t default_count) {
    return SampleSpec{o.samples.value_or(default_count), o.seed, true};
}

inline Model make_model(const std::string& spec, bool validate_table) {
    if (spec == "einstein") return EinsteinModel<3>{};
    if (spec == "einstein2") return EinsteinModel<2>{};
    if (spec == "mobius") return MobiusModel{};
    if (spec.rfind("table:", 0) == 0) {
        const auto path = spec.substr(6);
        if (validate_table) return load_table_file(path);
        return parse_table(read_json_file(path, "table"));
    }
    throw parse_error("unknown model '" + spec + "' (einstein, einstein2, mobius, table:<path>)");
}

// ---------------------------------------------------------------------------

template <typename M>
void cmd_check(const M& m, const Options& o, Report& r) {
    r.add(check_axioms(m, sample_spec(o, 10000)));
}

template <typename M>
void cmd_identities(const M& m, const Options& o, Report& r) {
    r.add(check_identities(m, sample_spec(o, 10000)));
}

inline void cmd_cosets(const FiniteTable& g, const Options& o, Report& r) {
    const ElementSet h = parse_finite_subset(g, o.subset);
    const auto sub = is_subgyrogroup(g, h);
    r.add_verdict("subgyrogroup", sub);
    if (!sub) return;
    const auto l = is_L_subgyrogroup(g, h);
    r.add_verdict("L_subgyrogroup", l);
    if (!l) return;
    const CosetPartition p = left_cosets(g, h);
    auto cosets = nlohmann::json::array();
    for (const auto& c : p.cosets) cosets.push_back(set_json(c));
    r.add({{"check", "partition"},
           {"verdict", "pass"},
           {"subgroup", set_json(h)},
           {"cosets", cosets},
           {"representatives", p.representatives}});
    // Homogeneity: every coset is reached from the subgroup coset and back.
    CheckResult<std::size_t> hom("homogeneity");
    for (std::size_t c = 0; c < p.count(); ++c) {
        const auto a = p.representatives[c];
        try {
            const auto to = homogeneity_translate(g, p, a, p.coset_of[0]);
            hom.record(to == c ? 0.0 : 1.0, 0.0, std::array<std::size_t, 2>{a, c});
        } catch (const invariant_error&) {
            hom.fail({a, c});
        }
    }
    r.add(hom);
}

template <typename M>
void cmd_cosets(const M& m, const Options& o, Report& r) {
    if (o.subset.empty()) throw parse_error("--subset is required for this command");
    const auto h = parse_continuous_subset(o.subset);
    const auto spec = sample_spec(o, 10000);
    const auto sub = is_subgyrogroup(m, h, spec);
    r.add_verdict("subgyrogroup", sub);
    if (sub) r.add_verdict("L_subgyrogroup", is_L_subgyrogroup(m, h, spec));
}

inline void cmd_metric(const FiniteTable& g, const Options& o, Report& r) {
    if (o.chains.size() != 1) throw parse_error("metric takes exactly one --chain");
    const FiniteChain chain = parse_finite_chain(read_json_file(o.chains[0], "chain"), g.order());
    if (auto v = validate_chain(g, chain); !v)
        throw precondition_error("invalid chain at index " + std::to_string(v.index.value_or(0)) + ": " + v.reason);
    const FinitePrenorm n(g, chain);
    const SampleSpec spec{};

    auto values = nlohmann::json::array();
    for (auto v : n.values()) values.push_back(dyadic_json(v));
    r.add({{"check", "prenorm_values"}, {"verdict", "pass"}, {"values", values}});
    r.add(check_prenorm_laws(n, spec));
    r.add(check_sandwich(n, o.depth));
    r.add(check_metric_laws(n, [&](std::size_t x) { return n.tail().contains(x); }, spec));

    if (o.quotient && o.subset.empty()) throw parse_error("--quotient needs --subset");
    std::optional<CosetPartition> partition;
    bool well_defined = false;
    if (!o.subset.empty()) {
        const ElementSet h = parse_finite_subset(g, o.subset);
        partition = left_cosets(g, h);
        r.add(coset_invariant_N_check(n, h));
        const auto laws = check_quotient_metric(n, *partition);
        well_defined = laws.find("quotient_well_defined")->pass;
        r.add(laws);
        // ϱ is only a function on G/H when N is H-invariant; otherwise the failed checks carry the witnesses.
        if (well_defined) {
            auto table = nlohmann::json::array();
            for (std::size_t a = 0; a < partition->count(); ++a) {
                auto row = nlohmann::json::array();
                for (std::size_t b = 0; b < partition->count(); ++b) row.push_back(dyadic_json(quotient_metric(n, *partition, a, b)));
                table.push_back(row);
            }
            auto cosets = nlohmann::json::array();
            for (const auto& c : partition->cosets) cosets.push_back(set_json(c));
            r.add({{"check", "quotient_table"}, {"verdict", "pass"}, {"cosets", cosets}, {"distances", table}});
        }
    }
    for (const auto& [x, y] : parse_pairs(g, o.pairs)) {
        nlohmann::json q{{"check", "query"}, {"x", x}, {"y", y},
                         {"rho", dyadic_json(rho_N(n, x, y))}, {"d", dyadic_json(pseudometric(n, x, y))}};
        if (well_defined) q["quotient"] = dyadic_json(quotient_metric_of(n, x, y));
        r.add(std::move(q));
    }
}

template <BallModel M>
void cmd_metric(const M& m, const Options& o, Report& r) {
    if (o.chains.size() != 1) throw parse_error("metric takes exactly one --chain");
    const RadialChain chain = parse_radial_chain(read_json_file(o.chains[0], "chain"));
    if (auto v = validate_chain(chain); !v)
        throw precondition_error("invalid chain at index " + std::to_string(v.index.value_or(0)) + ": " + v.reason);
    if (o.depth > max_family_depth) throw parse_error("--depth is at most " + std::to_string(max_family_depth));
    const RadialPrenorm<M> n(m, chain, o.depth);
    const double budget = 1.0 / double(std::uint64_t{1} << o.depth);
    const auto spec = sample_spec(o, 10000);
    r.add(check_prenorm_laws(n, spec, o.eps.value_or(budget)));
    r.add(check_sandwich(n, std::min(o.depth, 10u), spec, o.eps.value_or(budget)));
    r.add(check_metric_laws(n, [&](const element_t<M>& x) { return m.norm(x) <= m.tolerance(); }, spec,
                            o.eps.value_or(2.0 * budget)));
    for (const auto& [x, y] : parse_pairs(m, o.pairs)) {
        r.add({{"check", "query"}, {"x", element_to_json(x)}, {"y", element_to_json(y)},
               {"rho", dyadic_json(rho_N(n, x, y))}, {"d", dyadic_json(pseudometric(n, x, y))}});
    }
}

inline void cmd_microassoc(const FiniteTable& g, const Options& o, Report& r) {
    const ElementSet v = parse_finite_subset(g, o.subset);
    const ElementSet w = o.inner.empty() ? v : parse_finite_subset(g, o.inner);
    const auto inv = gyr_invariance_witness(g, v);
    r.add_verdict("V_gyr_invariant", Verdict<std::size_t>{!inv, inv.value_or(std::vector<std::size_t>{}),
                                                          inv ? "gyr[a,b](x) leaves V" : ""});
    r.add(micro_assoc_check(g, w, v));
}

template <BallModel M>
void cmd_microassoc(const M& m, const Options& o, Report& r) {
    const auto v = parse_continuous_subset(o.subset.empty() ? "ball:0.5" : o.subset);
    const auto w = o.inner.empty() ? v : parse_continuous_subset(o.inner);
    if (v.kind() != ContinuousSubset::Kind::ball || w.kind() != ContinuousSubset::Kind::ball)
        throw parse_error("microassoc on ball models takes ball:<r> subsets");
    MicroAssocSpec spec;
    spec.pairs = o.samples.value_or(100);
    spec.seed = o.seed;
    spec.tolerance = o.eps.value_or(1e-6);
    r.add(micro_assoc_check(m, w.radius(), v.radius(), spec));
}

inline void add_finite_chain_checks(const FiniteTable& g, const FiniteHull& hull, Report& r) {
    r.add({{"check", "chain"}, {"verdict", "pass"}, {"chain", chain_to_json(hull.chain)}, {"subgroup", set_json(hull.subgroup)}});
    r.add_chain_verdict("chain_valid", validate_chain(g, hull.chain));
    r.add_verdict("tail_L_subgyrogroup", is_L_subgyrogroup(g, hull.subgroup));
    r.add_chain_verdict("quotient_inclusion", admissible_quotient_inclusion_check(g, hull.chain, hull.subgroup));
}

inline void add_radial_chain_checks(const RadialChain& chain, Report& r) {
    r.add({{"check", "chain"}, {"verdict", "pass"}, {"chain", chain_to_json(chain)}});
    r.add_chain_verdict("chain_valid", validate_chain(chain));
    r.add_chain_verdict("quotient_inclusion", admissible_quotient_inclusion_check(chain));
}

inline void cmd_hull(const FiniteTable& g, const Options& o, Report& r) {
    add_finite_chain_checks(g, admissible_hull(g, parse_finite_subset(g, o.subset)), r);
}

template <BallModel M>
void cmd_hull(const M& m, const Options& o, Report& r) {
    const auto u = parse_continuous_subset(o.subset);
    if (u.kind() != ContinuousSubset::Kind::ball) throw parse_error("hull on ball models takes ball:<r>");
    add_radial_chain_checks(admissible_hull(m.c(), u.radius(), o.depth + 1), r);
}

inline void cmd_intersect(const FiniteTable& g, const Options& o, Report& r) {
    if (o.chains.empty()) throw parse_error("intersect needs at least one --chain");
    std::vector<FiniteChain> chains;
    for (const auto& path : o.chains) chains.push_back(parse_finite_chain(read_json_file(path, "chain"), g.order()));
    const FiniteHull hull = admissible_intersection(g, chains);
    add_finite_chain_checks(g, hull, r);
    ElementSet expected = chains[0].tail();
    for (const auto& c : chains) expected = expected.intersect(c.tail());
    r.add_verdict("tail_is_intersection", Verdict<std::size_t>{hull.subgroup == expected, {}, ""});
}

template <BallModel M>
void cmd_intersect(const M& m, const Options& o, Report& r) {
    if (o.chains.empty()) throw parse_error("intersect needs at least one --chain");
    std::vector<RadialChain> chains;
    for (const auto& path : o.chains) {
        chains.push_back(parse_radial_chain(read_json_file(path, "chain")));
        if (chains.back().c != m.c()) throw parse_error("chain '" + path + "' uses a different c than the model");
    }
    add_radial_chain_checks(admissible_intersection(chains), r);
}

inline void dispatch(const Model& model, const Options& o, Report& r) {
    std::visit(
        [&](const auto& m) {
            if (o.command == "check") cmd_check(m, o, r);
            else if (o.command == "identities") cmd_identities(m, o, r);
            else if (o.command == "cosets") cmd_cosets(m, o, r);
            else if (o.command == "metric") cmd_metric(m, o, r);
            else if (o.command == "microassoc") cmd_microassoc(m, o, r);
            else if (o.command == "hull") cmd_hull(m, o, r);
            else if (o.command == "intersect") cmd_intersect(m, o, r);
        },
        model);
}

inline void add_common_options(CLI::App& sub, Options& o) {
    sub.add_option("--model", o.model, "einstein | einstein2 | mobius | table:<path>")->required();
    sub.add_option("--subset", o.subset, "finite: i,j,...; continuous: axis:<i> or ball:<r>");
    sub.add_option("--inner", o.inner, "micro-associativity: the smaller set W (default: V)");
    sub.add_option("--chain", o.chains, "chain JSON file (repeatable for intersect)");
    sub.add_option("--depth", o.depth, "dyadic depth / sandwich depth / hull length")->check(CLI::Range(0u, 62u));
    sub.add_option("--samples", o.samples, "samples for continuous checks");
    sub.add_option("--seed", o.seed, "RNG seed");
    sub.add_option("--eps", o.eps, "tolerance override for sampled checks");
    sub.add_option("--out", o.out, "write the report here instead of stdout");
    sub.add_option("--pairs", o.pairs, "metric queries: x:y,... (finite) or x:y;... (continuous)");
    sub.add_flag("--quotient", o.quotient, "require the quotient metric table (implied by --subset)");
}

/// Runs one command. Returns 0 when every check passes, 1 on a verification
/// failure, 2 on bad input.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Gyrogroup verification toolkit", "gyro"};
    app.require_subcommand(1);
    const std::vector<std::pair<const char*, const char*>> commands{
        {"check", "gyrogroup axioms"},
        {"identities", "derived gyro-identities"},
        {"cosets", "subgyrogroup verdicts and left cosets"},
        {"metric", "prenorm, metric and quotient metric from a chain"},
        {"microassoc", "micro-associativity a⊕(b⊕V) = (a⊕b)⊕V"},
        {"hull", "admissible chain inside a neighborhood"},
        {"intersect", "diagonal intersection of admissible chains"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        add_common_options(*sub, o);
        sub->callback([&o, n = std::string(name)] { o.command = n; });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }

    try {
        const Model model = make_model(o.model, o.command != "check" && o.command != "identities");
        nlohmann::json context{{"command", o.command}, {"model", o.model}, {"seed", o.seed}};
        Report report(context);
        dispatch(model, o, report);
        if (o.out.empty()) {
            report.write(out);
        } else {
            std::ofstream f(o.out);
            if (!f) throw parse_error("cannot write '" + o.out + "'");
            report.write(f);
        }
        return report.failed() ? verification_failure : ok;
    } catch (const axiom_failure& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const carrier_error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const invariant_error& e) {
        err << "verification failure: " << e.what() << '\n';
        return verification_failure;
    }
}

}  // namespace gyro::cli
