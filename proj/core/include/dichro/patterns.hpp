#ifndef DICHRO_PATTERNS_HPP
#define DICHRO_PATTERNS_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dichro/digraph.hpp"

namespace dichro {

/// Transitive tournament on k vertices; arc i -> j for every i < j.
Digraph tt(int k);

/// Apex construction over two tournaments: vertex 0 beats every vertex of
/// h1, h1 beats every vertex of h2, h2 beats vertex 0. h1 occupies ids
/// 1..|h1|, h2 the rest.
Digraph delta(const Digraph& h1, const Digraph& h2);

inline Digraph delta1(int a, int b) { return delta(tt(a), tt(b)); }

inline Digraph c3() { return delta1(1, 1); }
Digraph c3_to_k1();
Digraph k1_to_c3();

/// Derivation of a tournament in the hero grammar: single vertex, full
/// composition of two heroes, or an apex over a transitive side and a
/// smaller hero.
class HeroExpr {
public:
    struct Leaf {};
    struct Seq {
        std::shared_ptr<const HeroExpr> left, right;
    };
    struct DeltaLeft {
        int k = 0;
        std::shared_ptr<const HeroExpr> inner;
    };
    struct DeltaRight {
        std::shared_ptr<const HeroExpr> inner;
        int k = 0;
    };
    using Node = std::variant<Leaf, Seq, DeltaLeft, DeltaRight>;

    explicit HeroExpr(Node node) : node_(std::move(node)) {}
    const Node& node() const { return node_; }

    static std::shared_ptr<const HeroExpr> leaf();
    static std::shared_ptr<const HeroExpr> seq(std::shared_ptr<const HeroExpr> l,
                                               std::shared_ptr<const HeroExpr> r);
    static std::shared_ptr<const HeroExpr> delta_left(
        int k, std::shared_ptr<const HeroExpr> inner);
    static std::shared_ptr<const HeroExpr> delta_right(
        std::shared_ptr<const HeroExpr> inner, int k);

    /// Rebuilds the tournament this derivation denotes.
    Digraph eval() const;

    /// Grammar-term rendering, e.g. "D(1,2,(K1=>K1))".
    std::string to_string() const;

private:
    Node node_;
};

using HeroExprPtr = std::shared_ptr<const HeroExpr>;

/// image[i] is the host vertex playing pattern vertex i.
struct Embedding {
    std::vector<int> image;
};

/// Checks that the host vertices in e induce exactly the pattern.
bool embedding_is_induced(const Digraph& host, const Digraph& pattern,
                          const Embedding& e);

/// Backtracking search for an induced copy of pattern in host. Pattern
/// vertices are matched in descending degree order with in/out degree
/// pruning. Deterministic: the lexicographically first embedding under
/// that order is returned.
std::optional<Embedding> contains_induced(const Digraph& host,
                                          const Digraph& pattern);

/// Specialized detectors for a directed triangle dominating, or dominated
/// by, a fourth vertex. Embeddings are ordered like c3_to_k1()/k1_to_c3().
std::optional<Embedding> find_c3_to_k1(const Digraph& host);
std::optional<Embedding> find_k1_to_c3(const Digraph& host);

/// Grammar membership for tournaments: a derivation when h is generated by
/// single vertices under full composition and transitive-side apexing,
/// nullopt otherwise. Throws not_a_tournament on non-tournament input.
std::optional<HeroExprPtr> is_hero_in_tournaments(const Digraph& h);

enum class ChordalHeroReason { transitive, delta_one_one_k, not_hero };

struct ChordalHeroVerdict {
    bool hero = false;
    ChordalHeroReason reason = ChordalHeroReason::not_hero;
    int k = 0;  // set when reason is delta_one_one_k
};

/// Heroes for orientations of chordal graphs: transitive tournaments and
/// the triangle-like family delta1(1, k). Throws not_a_tournament on
/// non-tournament input; partial orientations are deliberately out of
/// scope for classification.
ChordalHeroVerdict is_hero_in_chordal(const Digraph& h);

enum class ObstructionKind { transitive, delta_one_one_k, obstructed };

struct ObstructionReport {
    ObstructionKind kind = ObstructionKind::obstructed;
    int k = 0;
    bool contains_delta122 = false;
    bool contains_c3_to_k1 = false;
    bool contains_k1_to_c3 = false;
};

/// For a tournament hero h: either h is transitive, isomorphic to
/// delta1(1,k), or it contains one of delta1(2,2), c3=>K1, K1=>c3 as a
/// subtournament. Throws not_a_hero when h is outside the grammar.
ObstructionReport minimal_obstruction_check(const Digraph& h);

/// Mini-language for naming patterns: "TT k", "D 1 a b" (also compact
/// "TTk"/"D1ab"), "C3", "C3=>K1", "K1=>C3". Throws parse_error otherwise.
Digraph parse_pattern(std::string_view text);

}  // namespace dichro

#endif
