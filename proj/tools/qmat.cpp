// qmat: command line driver for the quantum matrix algebra toolkit.
//
// Subcommands: check, poincare, realize, ideal, mu.  Operators are given
// as JSON files or builtin specs (std:<d>, super:<r>|<s>, flip:<d>,
// superflip:<r>|<s>).  The Hecke parameter comes from --q: a rational
// like 4 or 9/4 (builtin deformed families need it to be the square of a
// rational), or "sym" for exact symbolic computation in q = a^2.
//
// Exit codes: 0 all checks pass, 1 operational failure (bad files or
// flags), 2 a mathematical check failed.

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <qmat/determinantal.hpp>
#include <qmat/invariant_theory.hpp>
#include <qmat/matrix_bialgebra.hpp>
#include <qmat/operator_io.hpp>
#include <qmat/quadratic_algebra.hpp>
#include <qmat/ratfunc.hpp>
#include <qmat/rational.hpp>
#include <qmat/report.hpp>

using namespace qmat;

namespace {

struct Config {
    std::string command;
    std::vector<std::string> ops;
    std::string op, S, R, T;
    std::string family;
    std::string sigma;
    std::string q_text = "4";
    std::string format = "table";
    int max_degree = 4;
    int degree = 3;
    bool twisted = false;
    std::uint64_t seed = 0;
};

std::optional<mpq_class> rational_sqrt(const mpq_class& v) {
    if (sgn(v) < 0) return std::nullopt;
    mpz_class num = v.get_num(), den = v.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
        mpz_perfect_square_p(den.get_mpz_t()) == 0)
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return mpq_class(rn, rd);
}

// The square root of the Hecke parameter, needed by the deformed builtin
// families.  Empty when the chosen q has no rational square root.
template <ScalarField K>
std::optional<K> parameter_root(const std::string& q_text);

template <>
std::optional<Rational> parameter_root<Rational>(const std::string& q_text) {
    Rational q = Rational::from_string(q_text);
    auto r = rational_sqrt(q.raw());
    if (!r) return std::nullopt;
    return Rational(*r);
}

template <>
std::optional<RatFunc> parameter_root<RatFunc>(const std::string&) {
    return RatFunc::var();
}

template <ScalarField K>
HeckeOp<K> resolve_operator(const std::string& spec, const std::string& q_text) {
    auto split_bar = [](const std::string& s) -> std::pair<int, int> {
        auto bar = s.find('|');
        require(bar != std::string::npos, "UsageError",
                "super spec needs the form r|s");
        return {std::stoi(s.substr(0, bar)), std::stoi(s.substr(bar + 1))};
    };
    auto need_root = [&](const char* fam) -> K {
        auto p = parameter_root<K>(q_text);
        require(p.has_value(), "UsageError",
                std::string(fam) + " builtin needs q to be the square of a rational; got q=" +
                    q_text);
        return *p;
    };
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string head = spec.substr(0, colon);
        const std::string tail = spec.substr(colon + 1);
        try {
            if (head == "std") return make_standard<K>(std::stoi(tail), need_root("std"));
            if (head == "flip") return make_flip<K>(std::stoi(tail));
            if (head == "super") {
                auto [r, s] = split_bar(tail);
                return make_super<K>(r, s, need_root("super"));
            }
            if (head == "superflip") {
                auto [r, s] = split_bar(tail);
                return make_superflip<K>(r, s);
            }
        } catch (const std::invalid_argument&) {
            fail("UsageError", "cannot parse builtin operator spec " + spec);
        }
    }
    return load_operator<K>(spec);
}

long lookup_mult(const std::vector<std::pair<Partition, long>>& row,
                 const Partition& shape) {
    for (const auto& [mu, l] : row)
        if (mu == shape) return l;
    return 0;
}

template <ScalarField K>
int cmd_check(const Config& cfg) {
    Report rep;
    for (const std::string& spec : cfg.ops) {
        HeckeOp<K> op;
        bool builtin = spec.find(':') != std::string::npos;
        if (builtin)
            op = resolve_operator<K>(spec, cfg.q_text);
        else
            op = load_operator<K>(spec, /*validate=*/false);
        CheckResult c = validate_operator(op);
        Report::Row row{{"op", op.name},
                        {"dim", op.d},
                        {"q", op.q.to_string()},
                        {"check", "hecke-symmetry"}};
        if (!c.ok) row["detail"] = c.detail;
        rep.add(std::move(row), c.ok);
    }
    rep.render(std::cout, cfg.format);
    return rep.exit_code();
}

template <ScalarField K>
int cmd_poincare(const Config& cfg) {
    require(!cfg.family.empty(), "UsageError", "poincare needs --family");
    Report rep;
    const std::string& fam = cfg.family;

    HeckeOp<K> R, dual;
    if (fam == "M" || fam == "N") {
        require(!cfg.S.empty() && !cfg.R.empty(), "UsageError",
                "family " + fam + " needs --S and --R");
        R = resolve_operator<K>(cfg.R, cfg.q_text);
        HeckeOp<K> S = resolve_operator<K>(cfg.S, cfg.q_text);
        dual = (fam == "N") ? prime_operator(S) : S;
    } else {
        require(!cfg.op.empty(), "UsageError", "family " + fam + " needs --op");
        R = resolve_operator<K>(cfg.op, cfg.q_text);
        dual = (fam == "F") ? prime_operator(R) : R;
    }

    QuadraticAlgebra<K> A;
    if (fam == "S") A = sym_algebra(R);
    else if (fam == "Lambda") A = ext_algebra(R);
    else if (fam == "E") A = end_algebra(R);
    else if (fam == "F") A = fend_algebra(R);
    else if (fam == "M") A = hom_algebra(dual, R);
    else if (fam == "N") A = fhom_algebra(resolve_operator<K>(cfg.S, cfg.q_text), R);
    else fail("UsageError", "unknown family " + fam);

    auto mult_R = multiplicity_table(R, cfg.max_degree);
    auto mult_dual = multiplicity_table(dual, cfg.max_degree);

    for (int n = 0; n <= cfg.max_degree; ++n) {
        std::uint64_t dim = graded_dimension(A, n);
        std::uint64_t predicted = 1;
        if (n >= 1) {
            predicted = 0;
            const auto& row = mult_R[static_cast<std::size_t>(n - 1)];
            if (fam == "S") {
                predicted = static_cast<std::uint64_t>(
                    lookup_mult(row, rectangle_partition(1, n)));
            } else if (fam == "Lambda") {
                predicted = static_cast<std::uint64_t>(
                    lookup_mult(row, rectangle_partition(n, 1)));
            } else {
                const auto& drow = mult_dual[static_cast<std::size_t>(n - 1)];
                for (const auto& [lam, lr] : row)
                    predicted += static_cast<std::uint64_t>(lr) *
                                 static_cast<std::uint64_t>(lookup_mult(drow, lam));
            }
        }
        rep.add({{"family", fam}, {"degree", n}, {"dim", dim}, {"predicted", predicted}},
                dim == predicted);
    }
    rep.render(std::cout, cfg.format);
    return rep.exit_code();
}

template <ScalarField K>
int cmd_realize(const Config& cfg) {
    require(!cfg.family.empty(), "UsageError", "realize needs --family");
    const std::string& fam = cfg.family;
    require(fam == "E" || fam == "F" || fam == "M" || fam == "N", "UsageError",
            "realize supports families E, F, M, N");

    HeckeOp<K> S, R;
    if (fam == "E" || fam == "F") {
        require(!cfg.op.empty(), "UsageError", "family " + fam + " needs --op");
        S = R = resolve_operator<K>(cfg.op, cfg.q_text);
    } else {
        require(!cfg.S.empty() && !cfg.R.empty(), "UsageError",
                "family " + fam + " needs --S and --R");
        S = resolve_operator<K>(cfg.S, cfg.q_text);
        R = resolve_operator<K>(cfg.R, cfg.q_text);
    }

    RealizedAlgebra<K> A = realize(S, R, fam, cfg.max_degree);
    Report rep;
    for (int n = 0; n <= cfg.max_degree; ++n)
        rep.add_ok({{"degree", n}, {"dim", A.component(n).dim()}});
    for (int n = 1; n <= cfg.max_degree; ++n) {
        auto blocks = block_split(A, n);
        for (const auto& blk : blocks)
            rep.add_ok({{"degree", n},
                        {"partition", blk.shape.to_string()},
                        {"dim", blk.space.dim()}});
    }

    // seeded random associativity probes in the lowest degrees
    if (cfg.max_degree >= 3) {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<int> coeff(-3, 3);
        const std::size_t g = A.generator_dim();
        int trials = 20;
        bool ok = true;
        for (int t = 0; t < trials && ok; ++t) {
            Vec<K> a(g), b(g), c(g);
            for (std::size_t i = 0; i < g; ++i) {
                a[i] = K(coeff(rng));
                b[i] = K(coeff(rng));
                c[i] = K(coeff(rng));
            }
            Vec<K> ab_c = realized_product(A, realized_product(A, a, 1, b, 1), 2, c, 1);
            Vec<K> a_bc = realized_product(A, a, 1, realized_product(A, b, 1, c, 1), 2);
            for (std::size_t i = 0; i < ab_c.size(); ++i)
                if (!(ab_c[i] == a_bc[i])) { ok = false; break; }
        }
        rep.add({{"check", "associativity"}, {"trials", trials}, {"seed", cfg.seed}}, ok);
    }

    if (fam == "E") {
        CheckResult c = coproduct_check(R);
        Report::Row row{{"check", "coproduct"}};
        if (!c.ok) row["detail"] = c.detail;
        rep.add(std::move(row), c.ok);
    }

    rep.render(std::cout, cfg.format);
    return rep.exit_code();
}

template <ScalarField K>
int cmd_ideal(const Config& cfg) {
    require(!cfg.S.empty() && !cfg.R.empty(), "UsageError", "ideal needs --S and --R");
    require(!cfg.sigma.empty(), "UsageError", "ideal needs --sigma");
    Partition sigma = Partition::from_string(cfg.sigma);
    require(!sigma.empty(), "EmptyGenerator", "ideal needs a nonempty sigma");
    HeckeOp<K> S = resolve_operator<K>(cfg.S, cfg.q_text);
    HeckeOp<K> R = resolve_operator<K>(cfg.R, cfg.q_text);
    RealizedAlgebra<K> A = realize(S, R, "M", cfg.degree);

    Report rep;
    for (int n = 1; n <= cfg.degree; ++n) {
        std::size_t computed = ideal_component(A, sigma, n).dim();
        std::size_t predicted = ideal_component_predicted(A, sigma, n).dim();
        rep.add({{"sigma", sigma.to_string()},
                 {"degree", n},
                 {"computed", computed},
                 {"predicted", predicted}},
                computed == predicted);
    }
    rep.render(std::cout, cfg.format);
    return rep.exit_code();
}

template <ScalarField K>
int cmd_mu(const Config& cfg) {
    require(!cfg.T.empty() && !cfg.R.empty() && !cfg.S.empty(), "UsageError",
            "mu needs --T, --R and --S");
    HeckeOp<K> T = resolve_operator<K>(cfg.T, cfg.q_text);
    HeckeOp<K> R = resolve_operator<K>(cfg.R, cfg.q_text);
    HeckeOp<K> S = resolve_operator<K>(cfg.S, cfg.q_text);
    MuStarInstance<K> inst = make_mu_star(T, R, S, cfg.twisted, cfg.degree);

    Birank br = birank_auto(inst.R);
    Report rep;
    for (int n = 1; n <= cfg.degree; ++n) {
        MuStarComponent<K> comp = mu_star_component(inst, n);
        std::size_t predicted = 0;
        for (const auto& blk : block_split(inst.TS, n))
            if (!gamma_rs_contains(br.r, br.s, blk.shape))
                predicted += blk.space.dim();
        rep.add({{"degree", n},
                 {"rank", comp.rank},
                 {"kernel", comp.kernel.dim()},
                 {"predicted_kernel", predicted}},
                comp.kernel.dim() == predicted);
    }
    for (int n = 1; n <= cfg.degree; ++n) {
        CheckResult kr = kernel_vs_rectangle(inst, n);
        Report::Row row{{"degree", n}, {"check", "kernel-rectangle"}, {"detail", kr.detail}};
        rep.add(std::move(row), kr.ok);
        CheckResult bi = block_injectivity_check(inst, n);
        Report::Row row2{{"degree", n}, {"check", "block-injectivity"}};
        if (!bi.ok) row2["detail"] = bi.detail;
        rep.add(std::move(row2), bi.ok);
    }
    if (cfg.degree >= 2) {
        CheckResult tr = twisted_relation_check(inst);
        rep.add({{"check", "degree-2-factorization"}, {"detail", tr.detail}}, tr.ok);
    }
    rep.render(std::cout, cfg.format);
    return rep.exit_code();
}

template <ScalarField K>
int run(const Config& cfg) {
    if (cfg.command == "check") return cmd_check<K>(cfg);
    if (cfg.command == "poincare") return cmd_poincare<K>(cfg);
    if (cfg.command == "realize") return cmd_realize<K>(cfg);
    if (cfg.command == "ideal") return cmd_ideal<K>(cfg);
    if (cfg.command == "mu") return cmd_mu<K>(cfg);
    fail("UsageError", "unknown command " + cfg.command);
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    CLI::App app{"quantum matrix algebra toolkit"};
    app.require_subcommand(1);

    auto add_shared = [&](CLI::App* sub) {
        sub->add_option("--q", cfg.q_text, "Hecke parameter (rational or 'sym')");
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"table", "json"}));
        sub->add_option("--seed", cfg.seed, "random seed for property probes");
    };

    CLI::App* check = app.add_subcommand("check", "validate Hecke symmetry candidates");
    check->add_option("--op", cfg.ops, "operator files or builtin specs")->required();
    add_shared(check);

    CLI::App* poincare =
        app.add_subcommand("poincare", "graded dimensions against multiplicity sums");
    poincare->add_option("--family", cfg.family, "S, Lambda, E, F, M or N")->required();
    poincare->add_option("--op", cfg.op, "operator for S, Lambda, E, F");
    poincare->add_option("--S", cfg.S, "dual-side operator for M, N");
    poincare->add_option("--R", cfg.R, "vector-side operator for M, N");
    poincare->add_option("--max-degree", cfg.max_degree, "largest degree");
    add_shared(poincare);

    CLI::App* realize_cmd =
        app.add_subcommand("realize", "projector model of a quadratic algebra");
    realize_cmd->add_option("--family", cfg.family, "E, F, M or N")->required();
    realize_cmd->add_option("--op", cfg.op, "operator for E, F");
    realize_cmd->add_option("--S", cfg.S, "dual-side operator for M, N");
    realize_cmd->add_option("--R", cfg.R, "vector-side operator for M, N");
    realize_cmd->add_option("--max-degree", cfg.max_degree, "largest degree");
    add_shared(realize_cmd);

    CLI::App* ideal = app.add_subcommand("ideal", "determinantal ideal components");
    ideal->add_option("--sigma", cfg.sigma, "generating partition, e.g. 2,1")->required();
    ideal->add_option("--degree", cfg.degree, "largest degree");
    ideal->add_option("--S", cfg.S, "dual-side operator")->required();
    ideal->add_option("--R", cfg.R, "vector-side operator")->required();
    add_shared(ideal);

    CLI::App* mu = app.add_subcommand("mu", "invariant-theory comparison map");
    mu->add_option("--T", cfg.T, "target dual operator")->required();
    mu->add_option("--R", cfg.R, "middle operator")->required();
    mu->add_option("--S", cfg.S, "source operator")->required();
    mu->add_option("--degree", cfg.degree, "largest degree");
    mu->add_flag("--twisted", cfg.twisted, "use the twisted coevaluation");
    add_shared(mu);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        if (cfg.q_text == "sym") return run<RatFunc>(cfg);
        return run<Rational>(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return (e.code() == "IOError" || e.code() == "UsageError") ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
