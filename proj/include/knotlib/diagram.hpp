// Oriented link diagrams as PD codes. A crossing stores its four arc labels
// counterclockwise starting from the incoming under-strand, plus a sign. For
// sign +1 the over-strand enters at slot 3 and leaves at slot 1; for sign -1
// it enters at slot 1 and leaves at slot 3. Crossingless components (which PD
// tuples cannot carry) are tracked as free loops.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "knotlib/rational.hpp"

namespace knotlib {

struct Crossing {
    std::array<int, 4> arc;
    int sign;  // +1 or -1
    bool operator==(const Crossing&) const = default;
};

struct SeifertStats {
    int writhe = 0;
    int circles = 0;
    int o_plus = 0;   // components of the positive-edge Seifert subgraph
    int o_minus = 0;  // components of the negative-edge subgraph
    // edges of the signed Seifert graph: (circle, circle, sign)
    std::vector<std::array<int, 3>> edges;
};

struct GoeritzData {
    std::vector<std::vector<long>> matrix;  // symmetric
    long correction = 0;                    // orientation term
};

class Diagram {
  public:
    Diagram() = default;
    Diagram(std::vector<Crossing> crossings, int free_loops);

    static Diagram unknot() { return Diagram({}, 1); }

    // Closure of a braid word; letters are +/-i for the i-th generator,
    // 1 <= i < strands.
    static Diagram from_braid(const std::vector<int>& word, int strands);

    // Standard three-band pretzel diagram, |p1|+|p2|+|p3| crossings.
    static Diagram pretzel(int p1, int p2, int p3);

    // Twist construction of a two-bridge diagram from a continued fraction:
    // alternately twists on the right side and on the bottom, then takes the
    // closure joining top ends and bottom ends.
    static Diagram rational(const std::vector<int>& twists);

    // PD tuples (counterclockwise, slot 0 = incoming under). Signs may be
    // given per crossing; otherwise over-strand directions are inferred from
    // global consistency of the orientation.
    static Diagram from_pd(const std::vector<std::array<int, 4>>& tuples,
                           const std::vector<int>& signs = {});

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int free_loops() const { return free_loops_; }
    size_t crossing_count() const { return crossings_.size(); }
    int writhe() const;
    int components() const;
    bool is_knot() const { return components() == 1; }

    Diagram mirror() const;
    Diagram switch_crossing(size_t k) const;
    // Orientation-respecting smoothing of crossing k.
    Diagram smooth_crossing(size_t k) const;

    // Deterministic encoding, invariant under arc relabeling and crossing
    // reordering; used as the memo key of the skein recursion.
    std::vector<int> canonical_key() const;

    // Arc ids in canonical traversal order (per component).
    std::vector<std::vector<int>> component_cycles() const;

    std::string pd_str() const;

  private:
    void validate() const;
    std::vector<Crossing> crossings_;
    int free_loops_ = 0;
};

SeifertStats seifert_stats(const Diagram& d);

// [w - n + 2*O+ - 1, w + n - 2*O- + 1]
RatInterval bennequin_bounds(const SeifertStats& s);

bool is_homogeneous(const SeifertStats& s);

// 1 + k - n for a positive braid word with k letters on n strands whose
// closure is a knot.
long positive_braid_value(const std::vector<int>& word, int strands);

// Goeritz matrix of the white-face checkerboard surface plus the orientation
// correction term.
GoeritzData goeritz(const Diagram& d);

// Knot signature, in the convention where the positive trefoil has
// signature +2.
int signature(const Diagram& d);

// |H_1| of the double branched cover, |det(Goeritz)|.
Int knot_determinant(const Diagram& d);

// Signature and determinant of a symmetric integer matrix, by exact
// congruence reduction.
std::pair<int, Int> sym_signature_det(std::vector<std::vector<Rat>> m);

}  // namespace knotlib
