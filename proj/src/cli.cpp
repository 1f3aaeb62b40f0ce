#include "chatelet/cli.hpp"

#include <cctype>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chatelet/errors.hpp"
#include "chatelet/local.hpp"
#include "chatelet/parse.hpp"
#include "chatelet/surface.hpp"
#include "chatelet/symbols.hpp"
#include "chatelet/verdict.hpp"

namespace chatelet {
namespace {

constexpr const char* kGrammar =
    "Polynomial expressions use the variable x, rational literals (3, 5/2, -7),\n"
    "operators + - * ^ with the usual precedence, and parentheses.\n"
    "Multiplication is always explicit: write 3*(x^2-7), not 3(x^2-7).\n"
    "Exponents are nonnegative integers.";

// Accepts a rational square class for a: a rational n/d is replaced by the
// integer n*d, which generates the same quadratic extension.
Integer parse_a(const std::string& text) {
    Rational r = parse_rational(text);
    Integer num = r.get_num(), den = r.get_den();
    Integer a = num * den;
    return a;
}

Place parse_place(const std::string& text) {
    std::string t = text;
    for (char& ch : t) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (t == "real" || t == "r" || t == "inf" || t == "infinity" || t == "oo")
        return Place::Real();
    Integer p;
    try {
        p = Integer(text);
    } catch (const std::invalid_argument&) {
        throw ParseError("place must be 'Real' or a prime", 0);
    }
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw ParseError("finite place must be a prime", 0);
    return Place::Finite(p);
}

int status_exit(WAStatus st) { return st == WAStatus::Inconclusive ? 2 : 0; }

struct CliState {
    std::string a, P, base, place, R, path;
    std::string r = "1";
    int depth = 24;
    int n = 12;
    long q = 3;
    std::string p = "2";
    bool json = false;
    long seed = 0;  // reserved for randomized modes; accepted, currently unused
};

nlohmann::json analyze_json(const ChateletSurface& s, int depth) {
    WAReport rep = wa_decide(s, depth);
    nlohmann::json j = report_to_json(rep);
    j["surface"] = {{"a", s.a.get_str()}, {"P", s.P.str()}};
    try {
        j["perpetual"] = perpetual_to_json(perpetual_classify(s));
    } catch (const Error& e) {
        j["perpetual"] = {{"classification", "inconclusive"},
                          {"detail", std::string("classification error: ") + e.what()}};
    }
    return j;
}

int cmd_analyze(const CliState& st, std::ostream& out) {
    ChateletSurface s(parse_a(st.a), parse_poly(st.P));
    if (st.json) {
        nlohmann::json j = analyze_json(s, st.depth);
        out << j.dump(2) << "\n";
        return j["verdict"] == "inconclusive" ? 2 : 0;
    }
    WAReport rep = wa_decide(s, st.depth);
    out << "Surface: y^2 - (" << s.a.get_str() << ") z^2 = " << s.P.str() << "\n";
    out << report_to_text(rep);
    try {
        out << "\n" << perpetual_to_text(perpetual_classify(s));
    } catch (const Error& e) {
        out << "\nPerpetual classification unavailable: " << e.what() << "\n";
    }
    return status_exit(rep.status);
}

int cmd_symbol(const CliState& st, std::ostream& out) {
    Rational a = parse_rational(st.a);
    Rational b = parse_rational(st.P);  // second positional reuses the P slot
    Place v = parse_place(st.place);
    out << hilbert_symbol(a, b, v).str() << "\n";
    return 0;
}

int cmd_galois(const CliState& st, std::ostream& out) {
    Poly P = parse_poly(st.P);
    GaloisType g = galois_group(P);
    if (st.json) {
        nlohmann::json j;
        j["galois"] = to_string(g);
        if (!st.base.empty()) {
            QuadField K(Rational(parse_a(st.base)));
            j["base"] = "Q(sqrt " + K.a.get_str() + ")";
            j["galois_over_base"] = to_string(galois_group(P, K));
            j["sqrt_a_in_splitting_field"] = sqrt_a_in_splitting_field(P, K);
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "Galois group over Q: " << to_string(g) << "\n";
    if (!st.base.empty()) {
        QuadField K(Rational(parse_a(st.base)));
        out << "Galois group over Q(sqrt " << K.a.get_str()
            << "): " << to_string(galois_group(P, K)) << "\n";
        out << "sqrt(a) in splitting field: "
            << (sqrt_a_in_splitting_field(P, K) ? "yes" : "no") << "\n";
    }
    return 0;
}

// Evaluation image of one generator at one place, mirroring the per-place
// analysis of the full pipeline.
EvImage image_at(const ChateletSurface& s, const BrauerGenerator& gen, const Place& v,
                 int depth) {
    if (v.is_real()) {
        if (locally_solvable(s, v, depth)) return ev_image_real(s, gen);
        EvImage img;
        img.determined = true;
        return img;
    }
    return ev_image(s, gen, v.p, depth);
}

int cmd_evimage(const CliState& st, std::ostream& out) {
    ChateletSurface s(parse_a(st.a), parse_poly(st.P));
    Place v = parse_place(st.place);
    BrauerType bt = classify(s);
    bool all_determined = true;
    nlohmann::json jg = nlohmann::json::array();
    for (const auto& gen : bt.gens) {
        EvImage img = image_at(s, gen, v, st.depth);
        all_determined = all_determined && img.determined;
        if (st.json) {
            nlohmann::json e;
            e["name"] = gen.name;
            e["algebra"] = gen.str();
            e["image"] = nlohmann::json::array();
            for (const auto& val : img.values) e["image"].push_back(val.str());
            e["determined"] = img.determined;
            nlohmann::json w = nlohmann::json::object();
            for (const auto& [val, wit] : img.witnesses)
                w[val.str()] = wit.at_inf ? "infinity"
                               : wit.x0  ? gen.coord + " = " + wit.x0->get_str()
                                         : wit.desc;
            e["witnesses"] = w;
            e["unresolved"] = img.unresolved;
            jg.push_back(e);
        } else {
            out << gen.str() << " at " << v.str() << ": {";
            bool first = true;
            for (const auto& val : img.values) {
                out << (first ? "" : ", ") << val.str();
                first = false;
            }
            out << "}" << (img.determined ? "" : " (incomplete)") << "\n";
            for (const auto& [val, wit] : img.witnesses)
                out << "  " << val.str() << " at "
                    << (wit.at_inf ? "infinity"
                        : wit.x0  ? gen.coord + " = " + wit.x0->get_str()
                                  : wit.desc)
                    << "\n";
            for (const auto& d : img.unresolved) out << "  open: " << d << "\n";
        }
    }
    if (bt.gens.empty() && !st.json)
        out << "Brauer quotient is trivial: no generator to evaluate, ev is constant 0\n";
    if (st.json) {
        nlohmann::json j;
        j["place"] = v.str();
        j["brauer"] = to_string(bt.kind);
        j["generators"] = jg;
        out << j.dump(2) << "\n";
    }
    return all_determined ? 0 : 2;
}

int cmd_norms(const CliState& st, std::ostream& out) {
    Rational a = parse_rational(st.a);
    Integer r(st.r);
    Integer p(st.p);
    NormExperimentResult res = norm_ratio_experiment(a, r, st.n, p);
    if (st.json) {
        nlohmann::json j;
        j["a"] = a.get_str();
        j["r"] = r.get_str();
        j["n"] = res.depth;
        j["p"] = res.p.get_str();
        j["total"] = res.total();
        j["in"] = res.decided_in;
        j["out"] = res.decided_out;
        j["undecided"] = res.undecided;
        j["lo"] = res.lo();
        j["hi"] = res.hi();
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "norm density in the class " << r.get_str() << " mod " << p.get_str() << ", depth "
        << res.depth << ":\n";
    out << "  classes: " << res.total() << "  norms: " << res.decided_in
        << "  non-norms: " << res.decided_out << "  undecided: " << res.undecided << "\n";
    out << "  density bracket: [" << res.lo() << ", " << res.hi() << "]\n";
    return 0;
}

int cmd_squares(const CliState& st, std::ostream& out) {
    Poly R = parse_poly(st.R);
    long c = count_square_values(Integer(st.q), R);
    if (st.json) {
        nlohmann::json j;
        j["q"] = st.q;
        j["R"] = R.str();
        j["count"] = c;
        j["expected"] = (st.q - 1) / 2;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "#{x in F_" << st.q << " : R(x) is a nonzero square} = " << c << "  ((q-1)/2 = "
        << (st.q - 1) / 2 << ")\n";
    return 0;
}

int cmd_corpus(const CliState& st, std::ostream& out, std::ostream& err) {
    std::ifstream in(st.path);
    if (!in) {
        err << "error: cannot open corpus file '" << st.path << "'\n";
        return 1;
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        err << "error: corpus is not valid JSON: " << e.what() << "\n";
        return 1;
    }
    if (!doc.is_array()) {
        err << "error: corpus must be a JSON array of {\"a\", \"P\"} objects\n";
        return 1;
    }

    struct Row {
        std::string line;
        int code = 0;  // 0 definitive, 2 inconclusive, 1 entry error
    };
    auto work = [&st](const nlohmann::json& entry) -> Row {
        Row row;
        try {
            if (!entry.is_object() || !entry.contains("a") || !entry.contains("P"))
                throw ParseError("corpus entry must be an object with \"a\" and \"P\"", 0);
            std::string astr = entry.at("a").get<std::string>();
            std::string pstr = entry.at("P").get<std::string>();
            ChateletSurface s(parse_a(astr), parse_poly(pstr));
            if (st.json) {
                row.line = analyze_json(s, st.depth).dump();
                row.code = row.line.find("\"verdict\":\"inconclusive\"") != std::string::npos ? 2 : 0;
            } else {
                WAReport rep = wa_decide(s, st.depth);
                std::ostringstream os;
                os << "a=" << astr << " P=" << pstr << ": " << to_string(rep.status);
                if (!rep.witnesses.empty()) {
                    os << " (witnesses:";
                    for (const auto& v : rep.witnesses) os << " " << v.str();
                    os << ")";
                }
                if (rep.status == WAStatus::Inconclusive && !rep.reason.empty())
                    os << " -- " << rep.reason;
                row.line = os.str();
                row.code = status_exit(rep.status);
            }
        } catch (const Error& e) {
            nlohmann::json j;
            if (st.json) {
                j["error"] = e.what();
                if (entry.is_object()) {
                    if (entry.contains("a")) j["surface"]["a"] = entry.at("a");
                    if (entry.contains("P")) j["surface"]["P"] = entry.at("P");
                }
                row.line = j.dump();
            } else {
                row.line = std::string("error: ") + e.what();
            }
            row.code = 1;
        }
        return row;
    };

    std::vector<std::future<Row>> futs;
    futs.reserve(doc.size());
    for (const auto& entry : doc)
        futs.push_back(std::async(std::launch::async, work, entry));
    bool any_error = false, any_inconclusive = false;
    for (auto& f : futs) {
        Row row = f.get();
        out << row.line << "\n";
        if (row.code == 1) any_error = true;
        if (row.code == 2) any_inconclusive = true;
    }
    if (any_error) return 1;
    return any_inconclusive ? 2 : 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliState st;
    CLI::App app{std::string("Chatelet surface arithmetic: weak approximation analysis over Q.\n\n") +
                 kGrammar};
    app.require_subcommand(1);
    app.add_option("--seed", st.seed,
                   "seed for randomized modes (reserved; current subcommands are deterministic)");

    CLI::App* an = app.add_subcommand(
        "analyze", "Full analysis of y^2 - a z^2 = P(x): Brauer group, local images, verdict");
    an->add_option("--a", st.a, "coefficient a (nonzero integer or rational, nonsquare)")
        ->required();
    an->add_option("--P", st.P, "polynomial P(x), degree 3 or 4, separable")->required();
    an->add_option("--depth", st.depth, "residue-disc search depth")
        ->check(CLI::Range(1, 64));
    an->add_flag("--json", st.json, "emit the JSON report");

    CLI::App* sy = app.add_subcommand("symbol", "Hilbert symbol (a, b)_v in {0, 1/2}");
    sy->add_option("a", st.a, "first argument (rational)")->required();
    sy->add_option("b", st.P, "second argument (rational)")->required();
    sy->add_option("place", st.place, "place: a prime, or Real")->required();

    CLI::App* ga = app.add_subcommand("galois", "Galois group of the splitting field of P");
    ga->add_option("--P", st.P, "polynomial of degree 3 or 4, separable")->required();
    ga->add_option("--base", st.base, "also classify over Q(sqrt a) for this a");
    ga->add_flag("--json", st.json, "emit JSON");

    CLI::App* ev = app.add_subcommand(
        "evimage", "Image of the Brauer generators' evaluation maps at one place");
    ev->add_option("--a", st.a, "coefficient a")->required();
    ev->add_option("--P", st.P, "polynomial P(x)")->required();
    ev->add_option("--place", st.place, "place: a prime, or Real")->required();
    ev->add_option("--depth", st.depth, "residue-disc search depth")
        ->check(CLI::Range(1, 64));
    ev->add_flag("--json", st.json, "emit JSON");

    CLI::App* no = app.add_subcommand(
        "norms", "Density of integral norms of Q_p(sqrt a) in a residue class mod p");
    no->add_option("--a", st.a, "a with Q_p(sqrt a)/Q_p ramified")->required();
    no->add_option("--r", st.r, "residue class representative");
    no->add_option("--n", st.n, "count classes mod p^n")->check(CLI::Range(1, 26));
    no->add_option("--p", st.p, "prime p (default 2)");
    no->add_flag("--json", st.json, "emit JSON");

    CLI::App* sq = app.add_subcommand(
        "squares", "Count x in F_q with R(x) a nonzero square, R a monic irreducible quadratic");
    sq->add_option("--q", st.q, "odd prime q")->required();
    sq->add_option("--R", st.R, "monic quadratic R(x)")->required();
    sq->add_flag("--json", st.json, "emit JSON");

    CLI::App* co = app.add_subcommand(
        "corpus", "Analyze a JSON array of {\"a\", \"P\"} surfaces, one report per line");
    co->add_option("path", st.path, "corpus file")->required();
    co->add_option("--depth", st.depth, "residue-disc search depth")
        ->check(CLI::Range(1, 64));
    co->add_flag("--json", st.json, "emit JSON lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        if (an->parsed()) return cmd_analyze(st, out);
        if (sy->parsed()) return cmd_symbol(st, out);
        if (ga->parsed()) return cmd_galois(st, out);
        if (ev->parsed()) return cmd_evimage(st, out);
        if (no->parsed()) return cmd_norms(st, out);
        if (sq->parsed()) return cmd_squares(st, out);
        if (co->parsed()) return cmd_corpus(st, out, err);
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 1;
}

}  // namespace chatelet
