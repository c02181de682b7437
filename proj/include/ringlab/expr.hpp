#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/constructions.hpp"
#include "ringlab/poly.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// AST of the ring-description language. Grammar, informally:
//   expr  := NAME '(' args ')' | ATOM
//   ATOM  := 'Z' digits
//   args  := arg (',' arg)*
//   arg   := expr | integer | identifier | [KEY '='] balanced-token
// Balanced tokens carry element labels like (1,0) or [[1,0],[0,1]]; lists of
// labels are bracketed: [2,3]. Whitespace is insignificant everywhere.
struct RingExpr {
    enum class Kind {
        Zmod,
        TruncSeries,
        Prod,
        Mat,
        Tri,
        SkewTri,
        FamS,
        FamT,
        FamA,
        FamB,
        Triangular,
        Corner,
        Quot,
        Opp,
        Sub
    };

    Kind kind = Kind::Zmod;
    std::vector<std::shared_ptr<const RingExpr>> children;
    std::uint64_t n = 0;             // modulus / dimension / truncation
    std::string name;                // sigma or bimodule name
    std::vector<std::string> labels; // element labels (corner e, ideal/sub gens)
};

using ExprPtr = std::shared_ptr<const RingExpr>;

ExprPtr parse_ring_expr(std::string_view text);  // throws ParseError
std::string print_ring_expr(const RingExpr& expr);
bool expr_equal(const RingExpr& a, const RingExpr& b);

// Named sigmas and bimodules: a small built-in set (id, swap, regular,
// reduce) plus whatever a definitions file contributes.
class Registry {
  public:
    using SigmaFactory = std::function<RingMap(const RingPtr&)>;
    using BimoduleFactory = std::function<Bimodule(const RingPtr&, const RingPtr&)>;

    Registry();

    void add_sigma(const std::string& name, SigmaFactory factory);
    void add_bimodule(const std::string& name, BimoduleFactory factory);

    bool has_sigma(const std::string& name) const { return sigmas_.count(name) != 0; }
    bool has_bimodule(const std::string& name) const { return bimodules_.count(name) != 0; }

    RingMap sigma(const std::string& name, const RingPtr& base) const;
    Bimodule bimodule(const std::string& name, const RingPtr& left, const RingPtr& right) const;

    // Definitions file, one entry per section:
    //   [sigma.NAME]
    //   ring = "Prod(Z2,Z2)"
    //   map = [0,2,1,3]            # image index per element index
    //   [bimodule.NAME]
    //   left = "Z4"
    //   right = "Z2"
    //   module = "Z2"
    //   left_action = [0,0,0,1,0,0,0,1]   # row-major |R| x |M|
    //   right_action = [0,0,0,1]          # row-major |M| x |S|
    void load_defs_file(const std::string& path, const Config& cfg);

  private:
    std::map<std::string, SigmaFactory> sigmas_;
    std::map<std::string, BimoduleFactory> bimodules_;
};

RingPtr evaluate(const RingExpr& expr, const Registry& registry, const Config& cfg = {});

// Parses "a0 + a1*x + a2*x^2" with ring-element labels as coefficients
// (wrapped in parentheses when they contain '+').
Poly parse_poly(const RingPtr& ring, std::string_view text, const Config& cfg = {});

}  // namespace ringlab
