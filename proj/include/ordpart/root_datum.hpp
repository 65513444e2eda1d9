#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordpart/config.hpp"
#include "ordpart/linalg.hpp"

namespace ordpart {

// Characters and cocharacters of the split maximal torus, as integer
// coordinate vectors of length `rank` with the standard dot pairing.
using Weight = Vec;
using Coweight = Vec;

inline Coord pairing(const Weight& lam, const Coweight& c) { return dot(lam, c); }

// Weyl group element. `on_weights` acts on X(T), `on_coweights` is the
// contragredient action on the cocharacter lattice (inverse transpose), so
// <w(x), w(c)> = <x, c> always holds. `word` is a reduced word in simple
// reflections, indices referring to RootDatum::simple order; elements produced
// by enumerate_weyl_group carry the lexicographically smallest reduced word.
struct WeylElement {
    Mat on_weights;
    Mat on_coweights;
    std::vector<int> word;

    bool operator==(const WeylElement& o) const { return on_weights == o.on_weights; }
    int length() const { return static_cast<int>(word.size()); }
};

// A (reduced) root datum: lattice Z^rank with roots, matching coroots and a
// choice of simple roots. Positive roots occupy indices [0, n_positive),
// sorted by height then descending-lex coordinates; roots[i + n_positive] is
// the negative of roots[i]. Immutable after construction.
struct RootDatum {
    int rank = 0;
    std::string name;
    std::vector<Weight> roots;
    std::vector<Coweight> coroots;
    std::vector<int> simple;  // indices into [0, n_positive)
    int n_positive = 0;

    bool connected_centre = false;           // ZR is a direct summand of X(T)
    bool simply_connected_derived = false;   // fundamental weights exist
    std::optional<std::vector<Weight>> fundamental;  // aligned with `simple`
    std::string fundamental_section = "none";        // which canonical section fixed them

    std::vector<int> heights;                 // per positive root
    std::vector<Vec> simple_coords;           // positive root over simple basis
    std::vector<std::vector<int>> root_sum;   // pos x pos -> pos index or -1

    int simple_count() const { return static_cast<int>(simple.size()); }
    const Weight& simple_root(int s) const { return roots[simple[s]]; }
    const Coweight& simple_coroot(int s) const { return coroots[simple[s]]; }

    // Index of a root in `roots`, -1 when absent.
    int root_index(const Weight& v) const;
    // Index among positive roots, -1 when not a positive root.
    int positive_index(const Weight& v) const;

   private:
    friend RootDatum finish_datum(int, std::string, std::vector<Weight>, std::vector<Coweight>,
                                  std::vector<Weight>,
                                  const std::map<Weight, Weight>&, const std::string&);
    std::map<Weight, int> index_;
};

// Presets: "GL(n)" (n>=2), "GSp(2n)" (2n>=4, even), and simply connected
// covers with a one-dimensional central extension: "A(n)", "B(n)" (n>=2),
// "C(n)" (n>=2), "D(n)" (n>=3), "G2", "F4".
RootDatum build_root_datum(const std::string& preset);

// Explicit datum; validates all root-datum invariants and canonicalizes the
// root order. `simple_indices` refer to positions in `roots` as given.
RootDatum build_root_datum(int rank, const std::vector<Weight>& roots,
                           const std::vector<Coweight>& coroots,
                           const std::vector<int>& simple_indices, const std::string& name);

// s_alpha(x) = x - <x, alpha_v> alpha, for the root at `root_idx`.
Weight reflect(const RootDatum& d, int root_idx, const Weight& x);
Coweight reflect_coweight(const RootDatum& d, int root_idx, const Coweight& c);

WeylElement weyl_identity(const RootDatum& d);
WeylElement weyl_from_word(const RootDatum& d, const std::vector<int>& word);
WeylElement weyl_compose(const WeylElement& x, const WeylElement& y);  // x then-after y
WeylElement weyl_inverse(const WeylElement& w);
Weight weyl_apply(const WeylElement& w, const Weight& x);
Coweight weyl_apply_coweight(const WeylElement& w, const Coweight& c);

// Whole Weyl group, BFS by word length then lexicographic word; element 0 is
// the identity and `longest` indexes the unique element sending R+ to -R+.
struct WeylGroup {
    std::vector<WeylElement> elements;
    int longest = -1;
};
WeylGroup enumerate_weyl_group(const RootDatum& d, const Budgets& budgets = {});

// Longest element, computed without enumerating W.
WeylElement longest_element(const RootDatum& d);

bool is_dominant(const RootDatum& d, const Weight& x);
// dominance_leq(lo, hi): hi - lo is a nonnegative integer combination of
// simple roots.
bool dominance_leq(const RootDatum& d, const Weight& lo, const Weight& hi);
// The dominant W-orbit representative, and a w with w(x) = representative.
std::pair<Weight, WeylElement> dominantize(const RootDatum& d, const Weight& x);

int root_height(const RootDatum& d, int positive_idx);
// 1 + max height over R+ (the Coxeter number for irreducible R).
int coxeter_h(const RootDatum& d);

// Sum of positive roots (integral stand-in for 2*rho).
Weight two_rho(const RootDatum& d);

// Fundamental weights in `simple` order; requires the simply connected flag.
const std::vector<Weight>& fundamental_weights(const RootDatum& d);
// theta := sum of fundamental weights; pairs to 1 with every simple coroot.
Weight twisting_element(const RootDatum& d);
// lambda_0 := sum over simple alpha of (-w0(lambda_alpha) - lambda_{-w0(alpha)});
// lies in X^0(T).
Weight dual_twist_lambda0(const RootDatum& d);

// True iff <lambda_alpha, beta_v> < p for all simple alpha and beta in R+.
bool is_good_prime(const RootDatum& d, Coord p);

// Swap roots and coroots. Involutive up to the name suffix.
RootDatum dualize(const RootDatum& d);

}  // namespace ordpart
