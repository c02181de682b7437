#include "ringlab/expr.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace ringlab {
namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError("at byte " + std::to_string(pos) + ": expected " + expected, pos);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c) fail(std::string("'") + c + "'");
        ++pos;
    }

    bool try_consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) fail("an identifier");
        return std::string(text.substr(start, pos - start));
    }

    std::uint64_t integer() {
        skip_ws();
        std::size_t start = pos;
        std::uint64_t value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            ++pos;
        }
        if (pos == start) fail("an integer");
        return value;
    }

    // Balanced run ending at a top-level ',' or ')' or ']'. Used for element
    // labels, which may themselves contain brackets and commas.
    std::string balanced_token() {
        skip_ws();
        std::size_t start = pos;
        int depth = 0;
        while (pos < text.size()) {
            char c = text[pos];
            if (depth == 0 && (c == ',' || c == ')' || c == ']')) break;
            if (c == '(' || c == '[' || c == '{') ++depth;
            if (c == ')' || c == ']' || c == '}') --depth;
            ++pos;
        }
        if (pos == start) fail("an element label");
        std::string out(text.substr(start, pos - start));
        while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
        return out;
    }

    // Optional "key=" prefix in front of a label argument.
    void skip_key_prefix() {
        skip_ws();
        std::size_t save = pos;
        std::size_t p = pos;
        while (p < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[p])) || text[p] == '_'))
            ++p;
        if (p > pos) {
            std::size_t q = p;
            while (q < text.size() && std::isspace(static_cast<unsigned char>(text[q]))) ++q;
            if (q < text.size() && text[q] == '=') {
                pos = q + 1;
                return;
            }
        }
        pos = save;
    }

    std::vector<std::string> label_list() {
        skip_key_prefix();
        expect('[');
        std::vector<std::string> out;
        if (!peek(']')) {
            out.push_back(balanced_token());
            while (try_consume(',')) out.push_back(balanced_token());
        }
        expect(']');
        return out;
    }

    ExprPtr expr() {
        std::string name = ident();
        skip_ws();
        if (pos >= text.size() || text[pos] != '(') {
            // atoms: Z<digits>
            if (name.size() > 1 && name[0] == 'Z' &&
                std::all_of(name.begin() + 1, name.end(),
                            [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                auto node = std::make_shared<RingExpr>();
                node->kind = RingExpr::Kind::Zmod;
                node->n = std::stoull(name.substr(1));
                return node;
            }
            fail("'(' or an atom like Z4");
        }
        ++pos;  // consume '('
        ExprPtr node = call(name);
        expect(')');
        return node;
    }

    ExprPtr call(const std::string& name) {
        auto node = std::make_shared<RingExpr>();
        if (name == "Zmod") {
            node->kind = RingExpr::Kind::Zmod;
            node->n = integer();
        } else if (name == "TruncSeries") {
            node->kind = RingExpr::Kind::TruncSeries;
            node->children.push_back(expr());
            expect(',');
            node->n = integer();
        } else if (name == "Prod") {
            node->kind = RingExpr::Kind::Prod;
            node->children.push_back(expr());
            while (try_consume(',')) node->children.push_back(expr());
        } else if (name == "Mat" || name == "Tri") {
            node->kind = name == "Mat" ? RingExpr::Kind::Mat : RingExpr::Kind::Tri;
            node->children.push_back(expr());
            expect(',');
            node->n = integer();
        } else if (name == "SkewTri") {
            node->kind = RingExpr::Kind::SkewTri;
            node->children.push_back(expr());
            expect(',');
            node->n = integer();
            expect(',');
            node->name = ident();
        } else if (name == "S" || name == "T" || name == "A" || name == "B") {
            node->kind = name == "S"   ? RingExpr::Kind::FamS
                         : name == "T" ? RingExpr::Kind::FamT
                         : name == "A" ? RingExpr::Kind::FamA
                                       : RingExpr::Kind::FamB;
            node->children.push_back(expr());
            expect(',');
            node->n = integer();
            node->name = try_consume(',') ? ident() : "id";
        } else if (name == "Triangular") {
            node->kind = RingExpr::Kind::Triangular;
            node->children.push_back(expr());
            expect(',');
            node->children.push_back(expr());
            expect(',');
            node->name = ident();
        } else if (name == "Corner") {
            node->kind = RingExpr::Kind::Corner;
            node->children.push_back(expr());
            expect(',');
            skip_key_prefix();
            node->labels.push_back(balanced_token());
        } else if (name == "Quot" || name == "Sub") {
            node->kind = name == "Quot" ? RingExpr::Kind::Quot : RingExpr::Kind::Sub;
            node->children.push_back(expr());
            expect(',');
            node->labels = label_list();
        } else if (name == "Opp") {
            node->kind = RingExpr::Kind::Opp;
            node->children.push_back(expr());
        } else {
            fail("a known constructor (Zmod, TruncSeries, Prod, Mat, Tri, SkewTri, S, T, A, B, "
                 "Triangular, Corner, Quot, Opp, Sub)");
        }
        return node;
    }
};

}  // namespace

ExprPtr parse_ring_expr(std::string_view text) {
    Parser p{text};
    ExprPtr out = p.expr();
    p.skip_ws();
    if (p.pos != text.size())
        throw ParseError("at byte " + std::to_string(p.pos) + ": trailing input after expression",
                         p.pos);
    return out;
}

std::string print_ring_expr(const RingExpr& e) {
    using Kind = RingExpr::Kind;
    auto child = [&](std::size_t i) { return print_ring_expr(*e.children[i]); };
    switch (e.kind) {
        case Kind::Zmod: return "Z" + std::to_string(e.n);
        case Kind::TruncSeries: return "TruncSeries(" + child(0) + "," + std::to_string(e.n) + ")";
        case Kind::Prod: {
            std::string out = "Prod(";
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i) out += ",";
                out += child(i);
            }
            return out + ")";
        }
        case Kind::Mat: return "Mat(" + child(0) + "," + std::to_string(e.n) + ")";
        case Kind::Tri: return "Tri(" + child(0) + "," + std::to_string(e.n) + ")";
        case Kind::SkewTri:
            return "SkewTri(" + child(0) + "," + std::to_string(e.n) + "," + e.name + ")";
        case Kind::FamS:
        case Kind::FamT:
        case Kind::FamA:
        case Kind::FamB: {
            std::string head = e.kind == Kind::FamS   ? "S"
                               : e.kind == Kind::FamT ? "T"
                               : e.kind == Kind::FamA ? "A"
                                                      : "B";
            std::string out = head + "(" + child(0) + "," + std::to_string(e.n);
            if (e.name != "id") out += "," + e.name;
            return out + ")";
        }
        case Kind::Triangular:
            return "Triangular(" + child(0) + "," + child(1) + "," + e.name + ")";
        case Kind::Corner: return "Corner(" + child(0) + "," + e.labels[0] + ")";
        case Kind::Quot:
        case Kind::Sub: {
            std::string out = (e.kind == Kind::Quot ? "Quot(" : "Sub(") + child(0) + ",[";
            for (std::size_t i = 0; i < e.labels.size(); ++i) {
                if (i) out += ",";
                out += e.labels[i];
            }
            return out + "])";
        }
        case Kind::Opp: return "Opp(" + child(0) + ")";
    }
    return "?";
}

bool expr_equal(const RingExpr& a, const RingExpr& b) {
    if (a.kind != b.kind || a.n != b.n || a.name != b.name || a.labels != b.labels ||
        a.children.size() != b.children.size())
        return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!expr_equal(*a.children[i], *b.children[i])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

Registry::Registry() {
    add_sigma("id", [](const RingPtr& base) { return identity_map(base); });
    add_sigma("swap", [](const RingPtr& base) {
        std::vector<Elem> probe;
        try {
            probe = prod_components(*base, base->zero());
        } catch (const ConstructionError&) {
            throw ConstructionError("sigma 'swap' needs a two-factor product ring, got " +
                                    base->label());
        }
        if (probe.size() != 2)
            throw ConstructionError("sigma 'swap' needs exactly two factors, got " + base->label());
        return make_map(base, base, [&base](Elem x) {
            std::vector<Elem> c = prod_components(*base, x);
            std::swap(c[0], c[1]);
            return prod_from_components(*base, c);
        });
    });
    add_bimodule("regular", [](const RingPtr& left, const RingPtr& right) {
        if (left->label() != right->label())
            throw ConstructionError("bimodule 'regular' needs equal rings on both sides, got " +
                                    left->label() + " and " + right->label());
        return regular_bimodule(left);
    });
    add_bimodule("reduce", [](const RingPtr& left, const RingPtr& right) {
        return reduction_bimodule(left, right);
    });
}

void Registry::add_sigma(const std::string& name, SigmaFactory factory) {
    sigmas_[name] = std::move(factory);
}

void Registry::add_bimodule(const std::string& name, BimoduleFactory factory) {
    bimodules_[name] = std::move(factory);
}

RingMap Registry::sigma(const std::string& name, const RingPtr& base) const {
    auto it = sigmas_.find(name);
    if (it == sigmas_.end()) throw ConstructionError("unknown sigma name: " + name);
    return it->second(base);
}

Bimodule Registry::bimodule(const std::string& name, const RingPtr& left,
                            const RingPtr& right) const {
    auto it = bimodules_.find(name);
    if (it == bimodules_.end()) throw ConstructionError("unknown bimodule name: " + name);
    Bimodule bm = it->second(left, right);
    bm.name = name;
    return bm;
}

namespace {

struct DefsSection {
    std::string kind;  // "sigma" or "bimodule"
    std::string name;
    std::map<std::string, std::string> strings;
    std::map<std::string, std::vector<std::uint64_t>> arrays;
};

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<DefsSection> parse_defs(std::istream& in, const std::string& path) {
    std::vector<DefsSection> sections;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConstructionError(path + ":" + std::to_string(lineno) + ": unclosed section");
            std::string inner = line.substr(1, line.size() - 2);
            auto dot = inner.find('.');
            if (dot == std::string::npos)
                throw ConstructionError(path + ":" + std::to_string(lineno) +
                                        ": section must be [sigma.NAME] or [bimodule.NAME]");
            DefsSection s;
            s.kind = trim(inner.substr(0, dot));
            s.name = trim(inner.substr(dot + 1));
            if ((s.kind != "sigma" && s.kind != "bimodule") || s.name.empty())
                throw ConstructionError(path + ":" + std::to_string(lineno) +
                                        ": section must be [sigma.NAME] or [bimodule.NAME]");
            sections.push_back(std::move(s));
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos || sections.empty())
            throw ConstructionError(path + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
            sections.back().strings[key] = value.substr(1, value.size() - 2);
        } else if (!value.empty() && value.front() == '[') {
            if (value.back() != ']')
                throw ConstructionError(path + ":" + std::to_string(lineno) +
                                        ": arrays must close on the same line");
            std::vector<std::uint64_t> xs;
            std::string body = value.substr(1, value.size() - 2);
            std::istringstream bs(body);
            std::string item;
            while (std::getline(bs, item, ',')) {
                item = trim(item);
                if (item.empty()) continue;
                xs.push_back(std::stoull(item));
            }
            sections.back().arrays[key] = std::move(xs);
        } else {
            throw ConstructionError(path + ":" + std::to_string(lineno) +
                                    ": value must be a \"string\" or [array]");
        }
    }
    return sections;
}

std::string squeeze(std::string s) {
    std::erase_if(s, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    return s;
}

}  // namespace

void Registry::load_defs_file(const std::string& path, const Config& cfg) {
    std::ifstream in(path);
    if (!in) throw ConstructionError("cannot open definitions file: " + path);
    for (DefsSection& s : parse_defs(in, path)) {
        if (s.kind == "sigma") {
            if (!s.strings.count("ring") || !s.arrays.count("map"))
                throw ConstructionError("sigma " + s.name + " needs ring = \"...\" and map = [...]");
            std::string ring_text = s.strings["ring"];
            std::vector<std::uint64_t> table = s.arrays["map"];
            add_sigma(s.name, [ring_text, table, this, cfg](const RingPtr& base) {
                ExprPtr want = parse_ring_expr(ring_text);
                if (squeeze(print_ring_expr(*want)) != squeeze(base->label()))
                    throw ConstructionError("sigma is defined over " + ring_text + ", not over " +
                                            base->label());
                if (table.size() != base->order())
                    throw ConstructionError("sigma map has " + std::to_string(table.size()) +
                                            " entries; the ring has " +
                                            std::to_string(base->order()));
                for (std::uint64_t img : table)
                    if (img >= base->order())
                        throw ConstructionError("sigma map image out of range: " +
                                                std::to_string(img));
                return make_map(base, base, [&table](Elem x) { return Elem{table[x.v]}; });
            });
        } else {
            for (const char* key : {"left", "right", "module"})
                if (!s.strings.count(key))
                    throw ConstructionError("bimodule " + s.name + " needs " + key + " = \"...\"");
            for (const char* key : {"left_action", "right_action"})
                if (!s.arrays.count(key))
                    throw ConstructionError("bimodule " + s.name + " needs " + key + " = [...]");
            auto strings = s.strings;
            auto arrays = s.arrays;
            add_bimodule(s.name, [strings, arrays, this, cfg](const RingPtr& left,
                                                              const RingPtr& right) {
                if (squeeze(strings.at("left")) != squeeze(left->label()) ||
                    squeeze(strings.at("right")) != squeeze(right->label()))
                    throw ConstructionError("bimodule is defined for (" + strings.at("left") + ", " +
                                            strings.at("right") + "), not for (" + left->label() +
                                            ", " + right->label() + ")");
                Bimodule bm;
                bm.left_ring = left;
                bm.right_ring = right;
                bm.module = evaluate(*parse_ring_expr(strings.at("module")), *this, cfg);
                for (std::uint64_t x : arrays.at("left_action")) bm.left_act.push_back(Elem{x});
                for (std::uint64_t x : arrays.at("right_action")) bm.right_act.push_back(Elem{x});
                return bm;
            });
        }
    }
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

RingPtr evaluate(const RingExpr& expr, const Registry& registry, const Config& cfg) {
    using Kind = RingExpr::Kind;
    auto child = [&](std::size_t i) { return evaluate(*expr.children[i], registry, cfg); };
    switch (expr.kind) {
        case Kind::Zmod: return make_zmod(expr.n, cfg);
        case Kind::TruncSeries:
            return make_trunc_series(child(0), static_cast<std::uint32_t>(expr.n), cfg);
        case Kind::Prod: {
            std::vector<RingPtr> factors;
            for (std::size_t i = 0; i < expr.children.size(); ++i) factors.push_back(child(i));
            return make_product(std::move(factors), cfg);
        }
        case Kind::Mat: return make_matrix(child(0), static_cast<std::uint32_t>(expr.n), cfg);
        case Kind::Tri: return make_upper_tri(child(0), static_cast<std::uint32_t>(expr.n), cfg);
        case Kind::SkewTri: {
            RingPtr base = child(0);
            RingMap sig = registry.sigma(expr.name, base);
            return make_skew_tri(base, static_cast<std::uint32_t>(expr.n), sig, expr.name, cfg);
        }
        case Kind::FamS:
        case Kind::FamT:
        case Kind::FamA:
        case Kind::FamB: {
            RingPtr base = child(0);
            RingMap sig = registry.sigma(expr.name, base);
            auto n = static_cast<std::uint32_t>(expr.n);
            switch (expr.kind) {
                case Kind::FamS: return make_family_S(base, n, sig, expr.name, cfg);
                case Kind::FamT: return make_family_T(base, n, sig, expr.name, cfg);
                case Kind::FamA: return make_family_A(base, n, sig, expr.name, cfg);
                default: return make_family_B(base, n, sig, expr.name, cfg);
            }
        }
        case Kind::Triangular: {
            RingPtr left = child(0);
            RingPtr right = child(1);
            Bimodule bm = registry.bimodule(expr.name, left, right);
            return make_triangular(bm, cfg);
        }
        case Kind::Corner: {
            RingPtr base = child(0);
            auto e = find_element_by_label(*base, expr.labels[0], cfg);
            if (!e)
                throw ConstructionError("no element of " + base->label() + " is labeled " +
                                        expr.labels[0]);
            return make_corner(base, *e, cfg);
        }
        case Kind::Quot: {
            RingPtr base = child(0);
            std::vector<Elem> gens;
            for (const std::string& l : expr.labels) {
                auto e = find_element_by_label(*base, l, cfg);
                if (!e)
                    throw ConstructionError("no element of " + base->label() + " is labeled " + l);
                gens.push_back(*e);
            }
            std::vector<Elem> members = ideal_closure(*base, gens, cfg);
            return make_quotient(base, make_ideal(base, std::move(members)), cfg);
        }
        case Kind::Opp: return make_opposite(child(0), cfg);
        case Kind::Sub: {
            RingPtr base = child(0);
            std::vector<Elem> gens;
            for (const std::string& l : expr.labels) {
                auto e = find_element_by_label(*base, l, cfg);
                if (!e)
                    throw ConstructionError("no element of " + base->label() + " is labeled " + l);
                gens.push_back(*e);
            }
            return make_subring(base, gens, cfg);
        }
    }
    throw ConstructionError("unhandled expression kind");
}

// ---------------------------------------------------------------------------
// Polynomial parsing
// ---------------------------------------------------------------------------

Poly parse_poly(const RingPtr& ring, std::string_view text, const Config& cfg) {
    // split on top-level '+'
    std::vector<std::string> terms;
    std::string current;
    int depth = 0;
    for (char c : text) {
        if (c == '(' || c == '[' || c == '{') ++depth;
        if (c == ')' || c == ']' || c == '}') --depth;
        if (c == '+' && depth == 0) {
            terms.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    terms.push_back(current);

    std::vector<Elem> coeffs;
    auto bump = [&](std::size_t power, Elem c) {
        if (coeffs.size() <= power) coeffs.resize(power + 1, ring->zero());
        coeffs[power] = ring->add(coeffs[power], c);
    };

    for (std::string term : terms) {
        term = trim(term);
        if (term.empty() || term == "0") continue;
        std::size_t power = 0;
        std::string label = term;
        // split at top-level '*'
        int d = 0;
        std::size_t star = std::string::npos;
        for (std::size_t i = 0; i < term.size(); ++i) {
            char c = term[i];
            if (c == '(' || c == '[' || c == '{') ++d;
            if (c == ')' || c == ']' || c == '}') --d;
            if (c == '*' && d == 0) {
                star = i;
                break;
            }
        }
        std::string xpart;
        if (star != std::string::npos) {
            label = trim(term.substr(0, star));
            xpart = trim(term.substr(star + 1));
        } else if (term[0] == 'x') {
            label = "";
            xpart = term;
        }
        if (!xpart.empty()) {
            if (xpart == "x")
                power = 1;
            else if (xpart.rfind("x^", 0) == 0)
                power = std::stoull(xpart.substr(2));
            else
                throw ParseError("bad power term '" + xpart + "' in polynomial", 0);
        }
        Elem c = ring->one();
        if (!label.empty()) {
            auto found = find_element_by_label(*ring, label, cfg);
            if (!found)
                throw ParseError("no element of " + ring->label() + " is labeled " + label, 0);
            c = *found;
        }
        bump(power, c);
    }
    return Poly(ring, std::move(coeffs));
}

}  // namespace ringlab
