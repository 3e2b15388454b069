// grpord: comparison oracles for orderable groups on the command line.
//
//   grpord compare --group <ctx> [--json] ELEM ELEM
//   grpord levitt  [--json] MATRIX
//   grpord sort    --group <ctx> FILE            ('-' reads stdin)
//   grpord fuzz    --group <ctx> --laws L1,L2 --samples N --seed S
//
// Contexts: free2-lex, free-indexed-lex, z2-lex, z2-eigen:<matrix>, klein,
// surf3p2, bundle:figure8, or bundle with --phi-a/--phi-b/--phi-inv-a/
// --phi-inv-b. Exit codes: 0 ok/true, 1 false/counterexample, 2 parse error,
// 3 precondition failure.

#include <grpord/grpord.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace grpord;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_false = 1;
constexpr int exit_parse = 2;
constexpr int exit_precondition = 3;

struct Law {
    enum Value { trichotomy, transitivity, left_inv, right_inv, conj_inv, endo_inv } value;

    static Law from_string(const std::string& s) {
        if (s == "trichotomy") return {trichotomy};
        if (s == "transitivity") return {transitivity};
        if (s == "left-inv") return {left_inv};
        if (s == "right-inv") return {right_inv};
        if (s == "conj-inv") return {conj_inv};
        if (s == "endo-inv") return {endo_inv};
        throw parse_error("grpord: unknown law '" + s + "'");
    }

    std::string str() const {
        switch (value) {
            case trichotomy: return "trichotomy";
            case transitivity: return "transitivity";
            case left_inv: return "left-inv";
            case right_inv: return "right-inv";
            case conj_inv: return "conj-inv";
            case endo_inv: return "endo-inv";
        }
        return "?";
    }
};

struct FuzzOutcome {
    bool passed = true;
    std::string law;
    int trial = -1;
    std::string witness;
};

/// A group context: element parsing bound to an order oracle plus the group
/// operations the fuzz laws need.
struct Context {
    virtual ~Context() = default;
    virtual std::string name() const = 0;
    virtual std::strong_ordering compare(const std::string& lhs, const std::string& rhs) = 0;
    virtual json explain(const std::string& lhs, const std::string& rhs) = 0;
    virtual std::vector<std::size_t> sort_order(const std::vector<std::string>& lines) = 0;
    virtual bool supports(Law law) const = 0;
    virtual FuzzOutcome fuzz(const std::vector<Law>& laws, int samples, std::uint64_t seed) = 0;
};

std::string ordering_str(std::strong_ordering o) {
    if (o == std::strong_ordering::less) return "LT";
    if (o == std::strong_ordering::greater) return "GT";
    return "EQ";
}

template <class E>
struct ContextImpl final : Context {
    std::string context_name;
    std::function<E(const std::string&)> parse;
    std::function<std::string(const E&)> print;
    OrderOracle<E> oracle;
    E identity;
    std::function<E(const E&, const E&)> mul;
    std::function<E(const E&)> inv;
    std::function<E(Sampler&)> gen;
    /// Draws one order-preserving endomorphism; empty when unsupported.
    std::function<std::function<E(const E&)>(Sampler&)> endo;
    std::function<json(const E&, const E&)> explainer;

    std::string name() const override { return context_name; }

    std::strong_ordering compare(const std::string& lhs, const std::string& rhs) override {
        return oracle.compare(parse(lhs), parse(rhs));
    }

    json explain(const std::string& lhs, const std::string& rhs) override {
        E u = parse(lhs), v = parse(rhs);
        json j;
        j["verdict"] = ordering_str(oracle.compare(u, v));
        json detail = explainer ? explainer(u, v) : json::object();
        j["stage"] = detail.value("stage", "order");
        detail.erase("stage");
        j["details"] = detail;
        return j;
    }

    std::vector<std::size_t> sort_order(const std::vector<std::string>& lines) override {
        std::vector<E> elems;
        elems.reserve(lines.size());
        for (const auto& line : lines) elems.push_back(parse(line));
        std::vector<std::size_t> idx(lines.size());
        for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t l, std::size_t r) {
            return oracle.compare(elems[l], elems[r]) == std::strong_ordering::less;
        });
        return idx;
    }

    bool supports(Law law) const override {
        return law.value != Law::endo_inv || static_cast<bool>(endo);
    }

    FuzzOutcome fuzz(const std::vector<Law>& laws, int samples, std::uint64_t seed) override {
        for (const Law& law : laws) {
            Sampler rng(seed);
            for (int trial = 0; trial < samples; ++trial) {
                std::string witness = check_law(law, rng);
                if (!witness.empty()) return {false, law.str(), trial, witness};
            }
        }
        return {};
    }

private:
    std::string check_law(const Law& law, Sampler& rng) {
        auto conj = [this](const E& g, const E& u) { return mul(mul(g, u), inv(g)); };
        switch (law.value) {
            case Law::trichotomy: {
                E u = gen(rng), v = gen(rng);
                auto uv = oracle.compare(u, v);
                auto vu = oracle.compare(v, u);
                bool consistent =
                    (uv == std::strong_ordering::equal && vu == std::strong_ordering::equal) ||
                    (uv == std::strong_ordering::less && vu == std::strong_ordering::greater) ||
                    (uv == std::strong_ordering::greater && vu == std::strong_ordering::less);
                if (!consistent || oracle.compare(u, u) != std::strong_ordering::equal)
                    return "u=" + print(u) + " v=" + print(v);
                return {};
            }
            case Law::transitivity: {
                E u = gen(rng), v = gen(rng), w = gen(rng);
                if (oracle.compare(u, v) != std::strong_ordering::greater &&
                    oracle.compare(v, w) != std::strong_ordering::greater &&
                    oracle.compare(u, w) == std::strong_ordering::greater)
                    return "u=" + print(u) + " v=" + print(v) + " w=" + print(w);
                return {};
            }
            case Law::left_inv: {
                E u = gen(rng), v = gen(rng), w = gen(rng);
                if (oracle.compare(u, v) != oracle.compare(mul(w, u), mul(w, v)))
                    return "u=" + print(u) + " v=" + print(v) + " w=" + print(w);
                return {};
            }
            case Law::right_inv: {
                E u = gen(rng), v = gen(rng), w = gen(rng);
                if (oracle.compare(u, v) != oracle.compare(mul(u, w), mul(v, w)))
                    return "u=" + print(u) + " v=" + print(v) + " w=" + print(w) + " : " +
                           ordering_str(oracle.compare(u, v)) + " vs " +
                           ordering_str(oracle.compare(mul(u, w), mul(v, w)));
                return {};
            }
            case Law::conj_inv: {
                E g = gen(rng), u = gen(rng);
                if (oracle.sign(u) != oracle.sign(conj(g, u)))
                    return "g=" + print(g) + " u=" + print(u);
                return {};
            }
            case Law::endo_inv: {
                E u = gen(rng), v = gen(rng);
                std::function<E(const E&)> phi = endo(rng);
                if (oracle.compare(u, v) != oracle.compare(phi(u), phi(v)))
                    return "u=" + print(u) + " v=" + print(v);
                return {};
            }
        }
        return {};
    }
};

json magnus_detail(const ReducedWord& diff, const IndexOrder& ord) {
    json j;
    j["stage"] = "magnus";
    if (diff.is_identity()) {
        j["stage"] = "equal";
        return j;
    }
    for (int degree = 1; degree <= diff.letter_length(); ++degree) {
        auto low = lowest_term(magnus_expand(diff, degree), ord);
        if (low) {
            j["degree"] = degree;
            j["monomial"] = to_string(low->first);
            j["coefficient"] = low->second.str();
            return j;
        }
    }
    return j;
}

std::unique_ptr<Context> make_free_context(const std::string& name, bool indexed_only) {
    auto ctx = std::make_unique<ContextImpl<ReducedWord>>();
    ctx->context_name = name;
    ctx->parse = [indexed_only](const std::string& s) {
        ReducedWord w = parse_word(s);
        for (const auto& syl : w.syllables()) {
            if (indexed_only && !syl.gen.has_index)
                throw parse_error("grpord: this context uses x[i,j] generators only");
            if (!indexed_only && !syl.gen.has_index && syl.gen.name != 'a' && syl.gen.name != 'b')
                throw parse_error("grpord: this context uses generators a, b (or x[i,j])");
        }
        return to_indexed(w);  // a and x[0,0] name the same generator here
    };
    ctx->print = print_word;
    ctx->oracle = magnus_oracle(Z2Order::lex());
    ctx->mul = [](const ReducedWord& u, const ReducedWord& v) { return multiply(u, v); };
    ctx->inv = [](const ReducedWord& u) { return invert(u); };
    if (indexed_only) {
        ctx->gen = [](Sampler& rng) { return random_indexed_word(rng); };
        ctx->endo = [](Sampler& rng) -> std::function<ReducedWord(const ReducedWord&)> {
            Int di(rng.uniform(-3, 3)), dj(rng.uniform(-3, 3));
            return [di, dj](const ReducedWord& w) { return shift_indices(w, di, dj); };
        };
    } else {
        ctx->gen = [](Sampler& rng) {
            const char alphabet[] = {'a', 'b'};
            return random_named_word(rng, alphabet);
        };
    }
    ctx->explainer = [](const ReducedWord& u, const ReducedWord& v) {
        return magnus_detail(multiply(invert(u), v), Z2Order::lex());
    };
    return ctx;
}

std::unique_ptr<Context> make_z2_context(const std::string& name, Z2Order ord) {
    auto ctx = std::make_unique<ContextImpl<IndexPair>>();
    ctx->context_name = name;
    ctx->parse = [](const std::string& s) { return parse_point(s); };
    ctx->print = print_point;
    ctx->oracle = z2_oracle(ord);
    ctx->identity = IndexPair{0, 0};
    ctx->mul = [](const IndexPair& u, const IndexPair& v) { return u + v; };
    ctx->inv = [](const IndexPair& u) { return -u; };
    ctx->gen = [](Sampler& rng) { return random_point(rng, 10); };
    if (ord.matrix())
        ctx->endo = [m = *ord.matrix()](Sampler&) -> std::function<IndexPair(const IndexPair&)> {
            return [m](const IndexPair& v) { return m.apply(v); };
        };
    ctx->explainer = [ord](const IndexPair& u, const IndexPair& v) {
        json j;
        j["stage"] = "cone";
        j["order"] = ord.describe();
        j["difference"] = print_point(v - u);
        return j;
    };
    return ctx;
}

std::unique_ptr<Context> make_klein_context() {
    auto ctx = std::make_unique<ContextImpl<KleinElement>>();
    ctx->context_name = "klein";
    ctx->parse = [](const std::string& s) { return klein_normal_form(parse_word(s)); };
    ctx->print = [](const KleinElement& e) {
        return "x^" + e.m.str() + " y^" + e.n.str();
    };
    ctx->oracle = klein_order();
    ctx->identity = KleinElement{0, 0};
    ctx->mul = klein_multiply;
    ctx->inv = klein_invert;
    ctx->gen = [](Sampler& rng) {
        const char alphabet[] = {'x', 'y'};
        return klein_normal_form(random_named_word(rng, alphabet));
    };
    ctx->explainer = [](const KleinElement& u, const KleinElement& v) {
        KleinElement d = klein_multiply(klein_invert(u), v);
        json j;
        if (d.m != 0) {
            j["stage"] = "quotient";
            j["x-exponent"] = d.m.str();
        } else if (d.n != 0) {
            j["stage"] = "kernel";
            j["y-exponent"] = d.n.str();
        } else {
            j["stage"] = "equal";
        }
        return j;
    };
    return ctx;
}

std::unique_ptr<Context> make_surf_context() {
    auto ctx = std::make_unique<ContextImpl<NF3P2>>();
    ctx->context_name = "surf3p2";
    ctx->parse = [](const std::string& s) { return nf_of_word(parse_word(s)); };
    ctx->print = print_nf;
    ctx->oracle = surf3p2_order();
    ctx->identity = NF3P2{0, 0, {}};
    ctx->mul = nf_multiply;
    ctx->inv = nf_invert;
    ctx->gen = [](Sampler& rng) {
        const char alphabet[] = {'a', 'b', 'c'};
        return nf_of_word(random_named_word(rng, alphabet));
    };
    ctx->explainer = [](const NF3P2& u, const NF3P2& v) {
        NF3P2 d = nf_multiply(nf_invert(u), v);
        if (d.m != 0 || d.n != 0) {
            json j;
            j["stage"] = "quotient";
            j["image"] = print_point(IndexPair{d.m, d.n});
            return j;
        }
        json j = magnus_detail(d.f, Z2Order::lex());
        if (j["stage"] == "magnus") j["stage"] = "kernel";
        return j;
    };
    return ctx;
}

std::unique_ptr<Context> make_bundle_context(const std::string& name, MonodromySpec spec) {
    auto ctx = std::make_unique<ContextImpl<BundleElement>>();
    MonodromyReport report = analyze_monodromy(spec);
    ctx->context_name = name;
    ctx->oracle = bundle_order(spec);  // throws domain_error when uncertified
    Z2Order eigen = *report.levitt.order;
    ctx->parse = [spec](const std::string& s) {
        return bundle_element_of_word(parse_word(s), spec);
    };
    ctx->print = [](const BundleElement& e) {
        return "t^" + e.t_exp.str() + " · " + print_word(e.w);
    };
    ctx->identity = BundleElement{0, {}};
    ctx->mul = [spec](const BundleElement& u, const BundleElement& v) {
        return bundle_multiply(u, v, spec);
    };
    ctx->inv = [spec](const BundleElement& u) { return bundle_invert(u, spec); };
    // The fibre group is exponentially distorted under the monodromy, so
    // random elements keep |t-exponent| <= 3 and fibre length <= 8 (monodromy
    // powers of longer words are intractable to materialize).
    ctx->gen = [spec](Sampler& rng) {
        for (;;) {
            WordBuilder b;
            int syllables = rng.geometric_mean4();
            for (int s = 0; s < syllables; ++s) {
                const char names[] = {'a', 'b', 't'};
                char name = names[rng.below(3)];
                long cap = name == 't' ? 1 : 3;
                b.push(GenLabel::named(name), Int(rng.uniform(-cap, cap)));
            }
            BundleElement e = bundle_element_of_word(ReducedWord::reduce(b.take()), spec);
            Int k = boost::multiprecision::abs(e.t_exp);
            if (k <= 3 && e.w.letter_length() <= 8) return e;
        }
    };
    ctx->endo = [spec](Sampler&) -> std::function<BundleElement(const BundleElement&)> {
        return [spec](const BundleElement& e) {
            BundleElement t{1, {}};
            return bundle_multiply(bundle_multiply(t, e, spec), bundle_invert(t, spec), spec);
        };
    };
    ctx->explainer = [spec, eigen](const BundleElement& u, const BundleElement& v) {
        BundleElement d = bundle_difference(u, v, spec);
        json j;
        if (d.t_exp != 0) {
            j["stage"] = "quotient";
            j["t-exponent"] = d.t_exp.str();
            return j;
        }
        IndexPair ab = abelianize_ab(d.w);
        if (!ab.is_zero()) {
            j["stage"] = "kernel";
            j["level"] = "homology";
            j["image"] = print_point(ab);
            j["order"] = eigen.describe();
            return j;
        }
        j = magnus_detail(commutator_rewrite(d.w), eigen);
        if (j["stage"] == "magnus") {
            j["stage"] = "kernel";
            j["level"] = "magnus";
            j["order"] = eigen.describe();
        }
        return j;
    };
    return ctx;
}

struct BundleFlags {
    std::string phi_a, phi_b, phi_inv_a, phi_inv_b;
};

std::unique_ptr<Context> make_context(const std::string& selector, const BundleFlags& bf) {
    if (selector == "free2-lex") return make_free_context(selector, false);
    if (selector == "free-indexed-lex") return make_free_context(selector, true);
    if (selector == "z2-lex") return make_z2_context(selector, Z2Order::lex());
    if (selector.rfind("z2-eigen:", 0) == 0) {
        IntMatrix2 m = parse_matrix2(selector.substr(9));
        return make_z2_context(selector, Z2Order::eigen(m));
    }
    if (selector == "klein") return make_klein_context();
    if (selector == "surf3p2") return make_surf_context();
    if (selector == "bundle:figure8") return make_bundle_context(selector, figure_eight_preset());
    if (selector == "bundle") {
        if (bf.phi_a.empty() || bf.phi_b.empty() || bf.phi_inv_a.empty() || bf.phi_inv_b.empty())
            throw parse_error(
                "grpord: bundle context needs --phi-a --phi-b --phi-inv-a --phi-inv-b");
        Endomorphism phi, phi_inv;
        phi.set_image(GenLabel::named('a'), parse_word(bf.phi_a));
        phi.set_image(GenLabel::named('b'), parse_word(bf.phi_b));
        phi_inv.set_image(GenLabel::named('a'), parse_word(bf.phi_inv_a));
        phi_inv.set_image(GenLabel::named('b'), parse_word(bf.phi_inv_b));
        return make_bundle_context(selector, make_monodromy(phi, phi_inv));
    }
    throw parse_error("grpord: unknown group selector '" + selector + "'");
}

int run_compare(const std::string& selector, const BundleFlags& bf, const std::string& lhs,
                const std::string& rhs, bool as_json) {
    std::unique_ptr<Context> ctx = make_context(selector, bf);
    if (as_json) {
        std::cout << ctx->explain(lhs, rhs).dump() << "\n";
    } else {
        std::cout << ordering_str(ctx->compare(lhs, rhs)) << "\n";
    }
    return exit_ok;
}

int run_levitt(const std::string& matrix_text, bool as_json) {
    IntMatrix2 m = parse_matrix2(matrix_text);
    LevittReport r = [&] {
        try {
            return levitt_check(m);
        } catch (const std::domain_error& e) {
            throw parse_error(e.what());  // bad matrix is an input error here
        }
    }();
    if (as_json) {
        json j;
        j["verdict"] = r.preserves ? "preserves" : "does-not-preserve";
        j["trace"] = r.trace.str();
        j["det"] = r.det.str();
        j["classification"] = to_string(r.classification);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (r.preserves ? "preserves" : "does not preserve") << " ("
                  << to_string(r.classification) << ", trace " << r.trace << ", det " << r.det
                  << ", discriminant " << r.discriminant << ")\n";
        if (r.order) std::cout << "order: " << r.order->describe() << "\n";
    }
    return r.preserves ? exit_ok : exit_false;
}

int run_sort(const std::string& selector, const BundleFlags& bf, const std::string& file) {
    std::unique_ptr<Context> ctx = make_context(selector, bf);
    std::vector<std::string> lines;
    {
        std::ifstream in;
        std::istream* stream = &std::cin;
        if (file != "-") {
            in.open(file);
            if (!in) throw parse_error("grpord: cannot open '" + file + "'");
            stream = &in;
        }
        std::string line;
        while (std::getline(*stream, line))
            if (!line.empty()) lines.push_back(line);
    }
    std::vector<std::size_t> order;
    try {
        order = ctx->sort_order(lines);
    } catch (const parse_error&) {
        // locate the offending line for the report
        for (std::size_t k = 0; k < lines.size(); ++k) {
            try {
                (void)ctx->compare(lines[k], lines[k]);
            } catch (const parse_error& e) {
                std::cerr << "parse error at line " << (k + 1) << ": " << e.what() << "\n";
                return exit_parse;
            }
        }
        throw;
    }
    for (std::size_t k : order) std::cout << lines[k] << "\n";
    return exit_ok;
}

int run_fuzz(const std::string& selector, const BundleFlags& bf, const std::string& laws_text,
             int samples, std::uint64_t seed) {
    std::unique_ptr<Context> ctx = make_context(selector, bf);
    std::vector<Law> laws;
    std::stringstream ss(laws_text);
    std::string item;
    while (std::getline(ss, item, ',')) laws.push_back(Law::from_string(item));
    if (laws.empty()) throw parse_error("grpord: --laws must name at least one law");
    for (const Law& law : laws)
        if (!ctx->supports(law))
            throw std::domain_error("grpord: context " + ctx->name() + " has no " + law.str() +
                                    " endomorphism");
    FuzzOutcome out = ctx->fuzz(laws, samples, seed);
    if (out.passed) {
        std::cout << "PASS group=" << ctx->name() << " laws=" << laws_text
                  << " samples=" << samples << " seed=" << seed << "\n";
        return exit_ok;
    }
    std::cout << "FAIL group=" << ctx->name() << " law=" << out.law << " trial=" << out.trial
              << " seed=" << seed << " witness: " << out.witness << "\n";
    return exit_false;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"comparison oracles for orderable groups"};
    app.require_subcommand(1);

    std::string group, lhs, rhs, matrix, file = "-";
    std::string laws = "trichotomy,transitivity,left-inv";
    bool as_json = false;
    int samples = 100;
    std::uint64_t seed = 1;
    BundleFlags bf;

    auto add_group_flags = [&](CLI::App* cmd) {
        cmd->add_option("--group", group, "group context selector")->required();
        cmd->add_option("--phi-a", bf.phi_a, "bundle monodromy image of a");
        cmd->add_option("--phi-b", bf.phi_b, "bundle monodromy image of b");
        cmd->add_option("--phi-inv-a", bf.phi_inv_a, "inverse monodromy image of a");
        cmd->add_option("--phi-inv-b", bf.phi_inv_b, "inverse monodromy image of b");
    };

    CLI::App* cmd_compare = app.add_subcommand("compare", "compare two elements");
    add_group_flags(cmd_compare);
    cmd_compare->add_flag("--json", as_json, "machine-readable output");
    cmd_compare->add_option("lhs", lhs)->required();
    cmd_compare->add_option("rhs", rhs)->required();

    CLI::App* cmd_levitt =
        app.add_subcommand("levitt", "decide whether a matrix preserves a bi-order of Z^2");
    cmd_levitt->add_flag("--json", as_json, "machine-readable output");
    cmd_levitt->add_option("matrix", matrix, "m11,m12;m21,m22")->required();

    CLI::App* cmd_sort = app.add_subcommand("sort", "sort element strings ascending");
    add_group_flags(cmd_sort);
    cmd_sort->add_option("file", file, "input file of element strings, '-' for stdin");

    CLI::App* cmd_fuzz = app.add_subcommand("fuzz", "property-test order laws");
    add_group_flags(cmd_fuzz);
    cmd_fuzz->add_option("--laws", laws, "comma-separated law subset");
    cmd_fuzz->add_option("--samples", samples, "trials per law");
    cmd_fuzz->add_option("--seed", seed, "deterministic seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_parse;
    }

    try {
        if (cmd_compare->parsed()) return run_compare(group, bf, lhs, rhs, as_json);
        if (cmd_levitt->parsed()) return run_levitt(matrix, as_json);
        if (cmd_sort->parsed()) return run_sort(group, bf, file);
        if (cmd_fuzz->parsed()) return run_fuzz(group, bf, laws, samples, seed);
    } catch (const parse_error& e) {
        std::cerr << e.what() << "\n";
        return exit_parse;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return exit_parse;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return exit_precondition;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_precondition;
    }
    return exit_ok;
}
