#include "mbg/expr.hpp"

#include "mbg/basis.hpp"
#include "mbg/endo.hpp"
#include "mbg/graded.hpp"
#include "mbg/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace mbg {

parse_error::parse_error(const std::string& msg, int line_, int col_)
    : error(msg + " at line " + std::to_string(line_) + ", column " + std::to_string(col_)),
      line(line_),
      col(col_) {}

namespace {

enum class Tok { Int, XGen, AGen, Star, Plus, Minus, Caret, LParen, RParen, LBrack, RBrack, Comma, One, End };

struct Token {
    Tok kind;
    long val = 0;  // integer value, or generator index (0-based) for XGen/AGen
    int pos = 0;
};

struct Lexer {
    std::vector<Token> toks;
    const std::string& text;

    explicit Lexer(const std::string& t) : text(t) {
        size_t i = 0;
        auto isdig = [](char ch) { return ch >= '0' && ch <= '9'; };
        while (i < t.size()) {
            char ch = t[i];
            if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
                ++i;
                continue;
            }
            int pos = static_cast<int>(i);
            if (isdig(ch)) {
                long v = 0;
                while (i < t.size() && isdig(t[i])) v = v * 10 + (t[i++] - '0');
                toks.push_back({Tok::Int, v, pos});
                continue;
            }
            if (ch == 'x' || ch == 'a') {
                ++i;
                if (i >= t.size() || !isdig(t[i])) err("generator needs an index", pos);
                long v = 0;
                while (i < t.size() && isdig(t[i])) v = v * 10 + (t[i++] - '0');
                if (v < 1) err("generator indices start at 1", pos);
                toks.push_back({ch == 'x' ? Tok::XGen : Tok::AGen, v - 1, pos});
                continue;
            }
            Tok k;
            switch (ch) {
                case '*': k = Tok::Star; break;
                case '+': k = Tok::Plus; break;
                case '-': k = Tok::Minus; break;
                case '^': k = Tok::Caret; break;
                case '(': k = Tok::LParen; break;
                case ')': k = Tok::RParen; break;
                case '[': k = Tok::LBrack; break;
                case ']': k = Tok::RBrack; break;
                case ',': k = Tok::Comma; break;
                default: err(std::string("unexpected character '") + ch + "'", pos); k = Tok::End;
            }
            toks.push_back({k, 0, pos});
            ++i;
        }
        toks.push_back({Tok::End, 0, static_cast<int>(t.size())});
    }

    [[noreturn]] void err(const std::string& msg, int pos) const {
        int line = 1, col = 1;
        for (int k = 0; k < pos && k < static_cast<int>(text.size()); ++k) {
            if (text[static_cast<size_t>(k)] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw parse_error(msg, line, col);
    }
};

struct Parser {
    Lexer lex;
    size_t at = 0;
    int n;

    Parser(const std::string& text, int rank) : lex(text), n(rank) {}

    const Token& peek(size_t ahead = 0) const {
        size_t i = at + ahead;
        return i < lex.toks.size() ? lex.toks[i] : lex.toks.back();
    }
    Token take() { return lex.toks[at < lex.toks.size() - 1 ? at++ : at]; }
    [[noreturn]] void err(const std::string& msg) const { lex.err(msg, peek().pos); }
    void expect(Tok k, const char* what) {
        if (peek().kind != k) err(std::string("expected ") + what);
        take();
    }

    long integer() {
        bool neg = false;
        if (peek().kind == Tok::Minus) {
            neg = true;
            take();
        }
        if (peek().kind != Tok::Int) err("expected an integer");
        long v = take().val;
        return neg ? -v : v;
    }

    int gen_index() {
        Token t = take();
        if (t.val >= n) lex.err("generator index exceeds rank " + std::to_string(n), t.pos);
        return static_cast<int>(t.val);
    }

    // ----- scalars -----

    Poly scalar() {
        Poly acc = sterm();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool minus = take().kind == Tok::Minus;
            Poly t = sterm();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Poly sterm() {
        int sign = 1;
        while (peek().kind == Tok::Minus) {
            sign = -sign;
            take();
        }
        Poly acc = sfactor();
        while (peek().kind == Tok::Star) {
            take();
            acc = acc * sfactor();
        }
        return sign < 0 ? -acc : acc;
    }

    Poly spow(const Poly& base, long k) {
        if (k >= 0) {
            Poly r = Poly::constant(n, 1);
            for (long t = 0; t < k; ++t) r = r * base;
            return r;
        }
        auto um = base.unit_monomial();
        Poly b = base;
        if (!um) {
            // also allow -monomial; anything else has no inverse
            Poly neg = -base;
            if (!neg.unit_monomial()) err("negative power of a non-invertible scalar");
            ExpVec e = *neg.unit_monomial();
            b = Poly::monomial(e, -1);
            Poly r = Poly::constant(n, 1);
            for (long t = 0; t < -k; ++t) r = r * Poly::monomial(ev_neg(e), -1);
            return r;
        }
        Poly inv = Poly::monomial(ev_neg(*um), 1);
        Poly r = Poly::constant(n, 1);
        for (long t = 0; t < -k; ++t) r = r * inv;
        return r;
    }

    Poly sfactor() {
        if (peek().kind == Tok::Int) {
            long v = take().val;
            Poly p = Poly::constant(n, static_cast<long>(v));
            if (peek().kind == Tok::Caret) {
                take();
                p = spow(p, integer());
            }
            return p;
        }
        if (peek().kind == Tok::AGen) {
            int i = gen_index();
            long k = 1;
            if (peek().kind == Tok::Caret) {
                take();
                k = integer();
            }
            return Poly::gen(n, i, static_cast<int>(k));
        }
        if (peek().kind == Tok::LParen) {
            take();
            Poly p = scalar();
            expect(Tok::RParen, "')'");
            if (peek().kind == Tok::Caret) {
                take();
                p = spow(p, integer());
            }
            return p;
        }
        err("expected a scalar");
    }

    // ----- elements -----

    Elt element() {
        Elt acc = factor();
        while (peek().kind == Tok::Star) {
            take();
            acc = mul(acc, factor());
        }
        return acc;
    }

    Elt factor() {
        Elt base = atom();
        while (peek().kind == Tok::Caret) {
            take();
            if (peek().kind == Tok::LParen) {
                int pos = peek().pos;
                take();
                if (peek().kind != Tok::LParen)
                    lex.err("module exponents need double parentheses: ^((...))", pos);
                take();
                Poly s = scalar();
                expect(Tok::RParen, "'))'");
                expect(Tok::RParen, "'))'");
                if (!ev_is_zero(base.e))
                    lex.err("module exponent applied to an element outside the derived subgroup", pos);
                base = module_pow(base, s);
            } else {
                base = pow(base, integer());
            }
        }
        return base;
    }

    Elt atom() {
        switch (peek().kind) {
            case Tok::XGen: return elt_gen(n, gen_index());
            case Tok::Int: {
                Token t = take();
                if (t.val != 1) lex.err("the only integer element is 1", t.pos);
                return elt_one(n);
            }
            case Tok::LParen: {
                take();
                Elt w = element();
                expect(Tok::RParen, "')'");
                return w;
            }
            case Tok::LBrack: {
                take();
                std::vector<Elt> parts;
                parts.push_back(element());
                while (peek().kind == Tok::Comma) {
                    take();
                    // an integer directly before an element iterates it
                    if (peek().kind == Tok::Int && peek(1).kind != Tok::Comma && peek(1).kind != Tok::RBrack &&
                        peek(1).kind != Tok::Caret && peek(1).kind != Tok::Star) {
                        long m = take().val;
                        Elt w = element();
                        for (long t = 0; t < m; ++t) parts.push_back(w);
                    } else {
                        parts.push_back(element());
                    }
                }
                expect(Tok::RBrack, "']'");
                if (parts.size() < 2 && parts.size() != 1) err("empty bracket");
                return left_normed(parts);
            }
            default: err("expected an element");
        }
    }
};

}  // namespace

Elt parse_element(const std::string& text, int n) {
    Parser p(text, n);
    Elt w = p.element();
    if (p.peek().kind != Tok::End) p.err("trailing input");
    return w;
}

Poly parse_scalar(const std::string& text, int n) {
    Parser p(text, n);
    Poly s = p.scalar();
    if (p.peek().kind != Tok::End) p.err("trailing input");
    return s;
}

std::string print_scalar(const Poly& p) { return p.str(); }

std::string print_elt(const Elt& w) {
    Factored f = fox_integrate(w);
    std::vector<std::string> parts;
    for (size_t i = 0; i < f.e.size(); ++i) {
        if (f.e[i] == 0) continue;
        std::string s = "x" + std::to_string(i + 1);
        if (f.e[i] != 1) s += "^" + std::to_string(f.e[i]);
        parts.push_back(std::move(s));
    }
    for (const auto& [km, p] : f.p) {
        if (p.is_zero()) continue;
        std::string s = "[x" + std::to_string(km.first + 1) + ",x" + std::to_string(km.second + 1) + "]";
        auto c = p.unit_monomial();
        if (c && ev_is_zero(*c)) {
            // exponent one, nothing to print
        } else if (p.terms().size() == 1 && ev_is_zero(p.terms()[0].e)) {
            s += "^" + p.terms()[0].c.get_str();
        } else {
            s += "^((" + p.str() + "))";
        }
        parts.push_back(std::move(s));
    }
    if (parts.empty()) return "1";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
    return out;
}

// ---------------------------------------------------------------------------
// command line

namespace {

Endo read_aut(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    std::vector<Elt> im;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        try {
            im.push_back(parse_element(line, n));
        } catch (const parse_error& e) {
            throw error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (static_cast<int>(im.size()) != n)
        throw error(path + ": expected " + std::to_string(n) + " images, found " + std::to_string(im.size()));
    return endo_from_images(std::move(im));
}

std::string depth_str(int d) { return d == kInf ? "inf" : std::to_string(d); }

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw error("cannot write " + out_path);
    out << text;
}

std::string basic_str(const BasicComm& b) {
    std::string s = "[";
    for (size_t i = 0; i < b.idx.size(); ++i) s += (i ? ",x" : "x") + std::to_string(b.idx[i] + 1);
    return s + "]";
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"exact computation in free metabelian groups"};
    app.require_subcommand(1);

    int rank = 4, weight = 3;
    unsigned long long seed = 0;
    std::string format = "text", out_path, aut_path, expr_text;
    bool timings = false, serial = false;

    auto add_common = [&](CLI::App* s, bool with_weight) {
        s->add_option("--rank", rank, "number of generators")->envname("MBG_RANK");
        if (with_weight) s->add_option("--weight", weight, "bracket weight");
        s->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
        s->add_option("--out", out_path, "write the report to a file");
    };

    auto* c_eval = app.add_subcommand("eval", "canonical form of an element");
    add_common(c_eval, false);
    c_eval->add_option("expr", expr_text, "element expression")->required();

    auto* c_depth = app.add_subcommand("depth", "lower-central depth of an element, or filtration depth with --aut");
    add_common(c_depth, false);
    c_depth->add_option("expr", expr_text, "element expression");
    c_depth->add_option("--aut", aut_path, "automorphism definition file (one image per line)");

    auto* c_jac = app.add_subcommand("jacobian", "Fox-derivative Jacobian of a map");
    add_common(c_jac, false);
    c_jac->add_option("--aut", aut_path, "definition file")->required();

    auto* c_inv = app.add_subcommand("invert", "exact inverse of an automorphism");
    add_common(c_inv, false);
    c_inv->add_option("--aut", aut_path, "definition file")->required();

    auto* c_chi = app.add_subcommand("chi", "graded class of a filtered automorphism");
    add_common(c_chi, true);
    c_chi->add_option("--aut", aut_path, "definition file")->required();

    auto* c_act = app.add_subcommand("act", "apply a map to an element");
    add_common(c_act, false);
    c_act->add_option("--aut", aut_path, "definition file")->required();
    c_act->add_option("expr", expr_text, "element expression")->required();

    auto* c_basis = app.add_subcommand("basis", "basic commutators of a given weight");
    add_common(c_basis, true);

    auto* c_ranks = app.add_subcommand("ranks", "layer dimensions at a given weight");
    add_common(c_ranks, true);

    auto* c_suite = app.add_subcommand("verify-suite", "run the full identity and rank suite");
    add_common(c_suite, true);
    c_suite->add_option("--seed", seed, "sampling seed");
    c_suite->add_flag("--timings", timings, "include per-check milliseconds");
    c_suite->add_flag("--serial", serial, "disable check-level parallelism");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const bool json = format == "json";
        std::ostringstream os;
        if (app.got_subcommand(c_eval)) {
            Elt w = parse_element(expr_text, rank);
            if (json) {
                nlohmann::ordered_json j;
                j["canonical"] = print_elt(w);
                j["abelianized"] = w.e;
                j["depth"] = gamma_depth(w) == kInf ? nlohmann::ordered_json(nullptr)
                                                    : nlohmann::ordered_json(gamma_depth(w));
                os << j.dump(2) << "\n";
            } else {
                os << print_elt(w) << "\n";
            }
        } else if (app.got_subcommand(c_depth)) {
            int d;
            if (!aut_path.empty())
                d = ia_depth(read_aut(aut_path, rank));
            else if (!expr_text.empty())
                d = gamma_depth(parse_element(expr_text, rank));
            else
                throw error("depth needs an expression or --aut");
            if (json)
                os << nlohmann::ordered_json{{"depth", d == kInf ? nlohmann::ordered_json(nullptr)
                                                                 : nlohmann::ordered_json(d)}}
                          .dump(2)
                   << "\n";
            else
                os << depth_str(d) << "\n";
        } else if (app.got_subcommand(c_jac)) {
            Endo f = read_aut(aut_path, rank);
            PolyMat j = jacobian(f);
            Poly dj = det(j);
            if (json) {
                nlohmann::ordered_json out;
                auto rows = nlohmann::ordered_json::array();
                for (int i = 0; i < rank; ++i) {
                    auto row = nlohmann::ordered_json::array();
                    for (int k = 0; k < rank; ++k) row.push_back(j.at(i, k).str());
                    rows.push_back(std::move(row));
                }
                out["jacobian"] = std::move(rows);
                out["det"] = dj.str();
                out["unit_monomial"] = dj.unit_monomial().has_value();
                os << out.dump(2) << "\n";
            } else {
                for (int i = 0; i < rank; ++i) {
                    for (int k = 0; k < rank; ++k) os << (k ? " | " : "") << j.at(i, k).str();
                    os << "\n";
                }
                os << "det = " << dj.str() << (dj.unit_monomial() ? "  (unit monomial)" : "") << "\n";
            }
        } else if (app.got_subcommand(c_inv)) {
            Endo f = read_aut(aut_path, rank);
            Endo g = inverse(f);
            if (json) {
                auto arr = nlohmann::ordered_json::array();
                for (const auto& w : g.im) arr.push_back(print_elt(w));
                os << nlohmann::ordered_json{{"images", arr}}.dump(2) << "\n";
            } else {
                for (int i = 0; i < rank; ++i) os << "x" << i + 1 << " -> " << print_elt(g.im[static_cast<size_t>(i)]) << "\n";
            }
        } else if (app.got_subcommand(c_chi)) {
            Endo f = read_aut(aut_path, rank);
            GrTuple t = chi(f, weight);
            if (json) {
                auto arr = nlohmann::ordered_json::array();
                for (const auto& g : t) arr.push_back(gv_str(g));
                os << nlohmann::ordered_json{{"weight", weight}, {"chi", arr}}.dump(2) << "\n";
            } else {
                for (int i = 0; i < rank; ++i) os << "x" << i + 1 << ": " << gv_str(t[static_cast<size_t>(i)]) << "\n";
            }
        } else if (app.got_subcommand(c_act)) {
            Endo f = read_aut(aut_path, rank);
            os << print_elt(apply(f, parse_element(expr_text, rank))) << "\n";
        } else if (app.got_subcommand(c_basis)) {
            auto bas = basis(rank, weight);
            if (json) {
                auto arr = nlohmann::ordered_json::array();
                for (const auto& b : bas) arr.push_back(basic_str(b));
                os << nlohmann::ordered_json{{"count", bas.size()}, {"basis", arr}}.dump(2) << "\n";
            } else {
                for (const auto& b : bas) os << basic_str(b) << "\n";
                os << "count: " << bas.size() << "\n";
            }
        } else if (app.got_subcommand(c_ranks)) {
            auto gr = rank_gr(rank, weight);
            auto tot = rank_layer_total(rank, weight);
            auto aut = rank_layer_aut(rank, weight);
            bool has_comp = weight >= 3;
            if (json) {
                nlohmann::ordered_json j;
                j["gr"] = gr.get_str();
                j["layer_total"] = tot.get_str();
                j["layer_aut"] = aut.get_str();
                if (has_comp) j["complement"] = rank_layer_complement(rank, weight).get_str();
                os << j.dump(2) << "\n";
            } else {
                os << "gr rank:      " << gr.get_str() << "\n";
                os << "layer total:  " << tot.get_str() << "\n";
                os << "layer aut:    " << aut.get_str() << "\n";
                if (has_comp) os << "complement:   " << rank_layer_complement(rank, weight).get_str() << "\n";
            }
        } else if (app.got_subcommand(c_suite)) {
            SuiteConfig cfg;
            cfg.n = rank;
            cfg.c = weight;
            cfg.seed = seed;
            cfg.parallel = !serial;
            cfg.timings = timings;
            SuiteResult res = run_suite(cfg);
            emit(json ? suite_json(res) : suite_text(res), out_path);
            return res.ok() ? 0 : 1;
        }
        emit(os.str(), out_path);
        return 0;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace mbg
