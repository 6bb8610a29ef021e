#include "wlat/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace wlat {

std::string Diagnostic::render(const std::string& filename) const {
    std::ostringstream os;
    os << filename << ':' << span.line << ':' << span.col_begin << ": " << message;
    return os.str();
}

namespace {

struct Token {
    std::string text;
    int col_begin = 0;  // 1-based
    int col_end = 0;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> toks;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
        toks.push_back({line.substr(i, j - i), static_cast<int>(i + 1), static_cast<int>(j + 1)});
        i = j;
    }
    return toks;
}

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    ParseResult run() {
        std::istringstream in(text_);
        std::string line;
        int lineno = 0;
        bool saw_format = false;
        while (std::getline(in, line)) {
            ++lineno;
            line_ = lineno;
            auto toks = tokenize(line);
            if (toks.empty()) continue;
            if (!saw_format) {
                if (toks[0].text != "format" || toks.size() != 2 || toks[1].text != "1")
                    error(toks[0], "expected 'format 1' header before any declarations");
                saw_format = true;
                if (toks[0].text == "format") continue;
            }
            dispatch(toks);
        }
        finish();
        return std::move(result_);
    }

  private:
    const std::string& text_;
    int line_ = 0;
    ParseResult result_;
    // deferred path lines: resolved after all arrows are known
    struct PendingRel {
        std::vector<Token> lhs, rhs;
        int line;
    };
    struct PendingPath {
        std::vector<Token> toks;
        int line;
    };
    struct PendingStrict {
        std::vector<Token> toks;
        int line;
    };
    std::vector<PendingRel> rels_;
    std::vector<PendingPath> nulls_;
    std::vector<PendingStrict> stricts_;
    Token init_tok_, fin_tok_;
    bool has_init_ = false, has_fin_ = false;

    void error(const Token& tok, std::string msg) {
        result_.diagnostics.push_back({{line_, tok.col_begin, tok.col_end}, std::move(msg)});
    }
    void error_at(int line, const Token& tok, std::string msg) {
        result_.diagnostics.push_back({{line, tok.col_begin, tok.col_end}, std::move(msg)});
    }

    void dispatch(const std::vector<Token>& toks) {
        const std::string& kw = toks[0].text;
        if (kw == "format") {
            error(toks[0], "duplicate format header");
        } else if (kw == "node") {
            if (toks.size() < 2) return error(toks[0], "node: expected at least one id");
            for (size_t i = 1; i < toks.size(); ++i) {
                if (result_.lattice.node_id(toks[i].text))
                    error(toks[i], "node: duplicate node id '" + toks[i].text + "'");
                else
                    result_.lattice.nodes.push_back(toks[i].text);
            }
        } else if (kw == "init" || kw == "fin") {
            if (toks.size() != 2) return error(toks[0], kw + ": expected exactly one node id");
            if (kw == "init") {
                init_tok_ = toks[1];
                has_init_ = true;
            } else {
                fin_tok_ = toks[1];
                has_fin_ = true;
            }
        } else if (kw == "arrow") {
            parse_arrow(toks);
        } else if (kw == "rel") {
            auto eq = std::find_if(toks.begin() + 1, toks.end(), [](const Token& t) { return t.text == "="; });
            if (eq == toks.end()) return error(toks[0], "rel: expected '=' between two paths");
            PendingRel pr;
            pr.lhs.assign(toks.begin() + 1, eq);
            pr.rhs.assign(eq + 1, toks.end());
            pr.line = line_;
            if (pr.lhs.empty() || pr.rhs.empty()) return error(toks[0], "rel: both sides need at least one arrow");
            rels_.push_back(std::move(pr));
        } else if (kw == "null") {
            if (toks.size() < 2) return error(toks[0], "null: expected a path");
            nulls_.push_back({{toks.begin() + 1, toks.end()}, line_});
        } else if (kw == "strict") {
            if (toks.size() < 2) return error(toks[0], "strict: expected a relation index or a rel literal");
            stricts_.push_back({{toks.begin() + 1, toks.end()}, line_});
        } else {
            error(toks[0], "unknown directive '" + kw + "'");
        }
    }

    void parse_arrow(const std::vector<Token>& toks) {
        // arrow f: a -> b   (the ':' may stick to the arrow id)
        if (toks.size() < 4) return error(toks[0], "arrow: expected 'arrow <id>: <src> -> <dst>'");
        std::string name = toks[1].text;
        size_t at = 2;
        if (!name.empty() && name.back() == ':')
            name.pop_back();
        else if (toks.size() >= 5 && toks[2].text == ":")
            at = 3;
        else
            return error(toks[1], "arrow: expected ':' after the arrow id");
        if (toks.size() != at + 3 || toks[at + 1].text != "->")
            return error(toks.back(), "arrow: expected '<src> -> <dst>'");
        if (name.empty()) return error(toks[1], "arrow: empty arrow id");
        if (result_.lattice.arrow_id(name)) return error(toks[1], "arrow: duplicate arrow id '" + name + "'");
        auto src = result_.lattice.node_id(toks[at].text);
        if (!src) return error(toks[at], "arrow: unknown node '" + toks[at].text + "'");
        auto dst = result_.lattice.node_id(toks[at + 2].text);
        if (!dst) return error(toks[at + 2], "arrow: unknown node '" + toks[at + 2].text + "'");
        result_.lattice.arrows.push_back({name, *src, *dst});
    }

    bool resolve_path(const std::vector<Token>& toks, int line, Path& out) {
        out.clear();
        for (const Token& t : toks) {
            auto id = result_.lattice.arrow_id(t.text);
            if (!id) {
                error_at(line, t, "unknown arrow '" + t.text + "'");
                return false;
            }
            out.push_back(*id);
        }
        if (!result_.lattice.composable(out)) {
            error_at(line, toks.front(), "path does not compose (consecutive arrows must share a node)");
            return false;
        }
        return true;
    }

    void finish() {
        Lattice& lat = result_.lattice;
        if (has_init_) {
            auto id = lat.node_id(init_tok_.text);
            if (!id)
                error(init_tok_, "init: unknown node '" + init_tok_.text + "'");
            else
                lat.init = *id;
        }
        if (has_fin_) {
            auto id = lat.node_id(fin_tok_.text);
            if (!id)
                error(fin_tok_, "fin: unknown node '" + fin_tok_.text + "'");
            else
                lat.fin = *id;
        }
        for (const auto& pr : rels_) {
            Relation r;
            bool ok = resolve_path(pr.lhs, pr.line, r.lhs);
            ok = resolve_path(pr.rhs, pr.line, r.rhs) && ok;
            if (!ok) continue;
            if (lat.path_src(r.lhs) != lat.path_src(r.rhs) || lat.path_dst(r.lhs) != lat.path_dst(r.rhs)) {
                error_at(pr.line, pr.lhs.front(), "rel: sides are not parallel paths");
                continue;
            }
            lat.relations.push_back(std::move(r));
        }
        for (const auto& pn : nulls_) {
            Path p;
            if (resolve_path(pn.toks, pn.line, p)) lat.null_marks.push_back(std::move(p));
        }
        for (const auto& ps : stricts_) {
            resolve_strict(ps);
        }
    }

    void resolve_strict(const PendingStrict& ps) {
        Lattice& lat = result_.lattice;
        if (ps.toks.size() == 1 && !ps.toks[0].text.empty() &&
            std::all_of(ps.toks[0].text.begin(), ps.toks[0].text.end(),
                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            int idx = std::stoi(ps.toks[0].text);
            if (idx < 0 || idx >= static_cast<int>(lat.relations.size()))
                return error_at(ps.line, ps.toks[0], "strict: relation index " + ps.toks[0].text + " out of range");
            lat.strict_marks.push_back(idx);
            return;
        }
        auto eq = std::find_if(ps.toks.begin(), ps.toks.end(), [](const Token& t) { return t.text == "="; });
        if (eq == ps.toks.end())
            return error_at(ps.line, ps.toks[0], "strict: expected a relation index or '<path> = <path>'");
        Path lhs, rhs;
        if (!resolve_path({ps.toks.begin(), eq}, ps.line, lhs)) return;
        if (!resolve_path({eq + 1, ps.toks.end()}, ps.line, rhs)) return;
        for (size_t i = 0; i < lat.relations.size(); ++i) {
            const Relation& r = lat.relations[i];
            if ((r.lhs == lhs && r.rhs == rhs) || (r.lhs == rhs && r.rhs == lhs)) {
                lat.strict_marks.push_back(static_cast<int>(i));
                return;
            }
        }
        error_at(ps.line, ps.toks[0], "strict: no declared relation matches this literal");
    }
};

}  // namespace

ParseResult parse_lattice(const std::string& text) { return Parser(text).run(); }

ParseResult parse_lattice_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        ParseResult r;
        r.diagnostics.push_back({{0, 0, 0}, "cannot open file '" + path + "'"});
        return r;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_lattice(ss.str());
}

std::string print_lattice(const Lattice& lat) {
    std::ostringstream os;
    os << "format 1\n";
    if (!lat.name.empty()) os << "# " << lat.name << "\n";
    if (!lat.nodes.empty()) {
        os << "node";
        for (const auto& n : lat.nodes) os << ' ' << n;
        os << '\n';
    }
    if (lat.init >= 0) os << "init " << lat.nodes[lat.init] << '\n';
    if (lat.fin >= 0) os << "fin " << lat.nodes[lat.fin] << '\n';
    for (const auto& a : lat.arrows)
        os << "arrow " << a.name << ": " << lat.nodes[a.src] << " -> " << lat.nodes[a.dst] << '\n';
    auto spaced = [&](const Path& p) {
        std::string s;
        for (size_t i = 0; i < p.size(); ++i) {
            if (i) s += ' ';
            s += lat.arrows[p[i]].name;
        }
        return s;
    };
    for (const auto& r : lat.relations) os << "rel " << spaced(r.lhs) << " = " << spaced(r.rhs) << '\n';
    for (const auto& p : lat.null_marks) os << "null " << spaced(p) << '\n';
    for (int s : lat.strict_marks) os << "strict " << s << '\n';
    return os.str();
}

}  // namespace wlat
