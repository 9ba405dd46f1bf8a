// Arrow version of the chair tiling as a 2x2 block substitution on Z^2:
// region generation, the chair-derivation consistency check, and return
// sublattices of patches.

#ifndef RETCOH_CHAIR_HPP
#define RETCOH_CHAIR_HPP

#include <array>
#include <tuple>

#include "retcoh/exactlin.hpp"

namespace retcoh {

enum class Arrow : int { NE = 0, NW = 1, SW = 2, SE = 3 };

const char* arrow_name(Arrow a);
Arrow arrow_from_name(const std::string& name);
Arrow rotate_ccw(Arrow a);

/// Quadrant-tagged 2x2 block rule, loaded from configuration text of the
/// form "NE = SW:NE SE:NW NW:SE NE:NE" (one line per letter).
struct BlockSubstitution {
    // rule[letter][qy][qx]: qx, qy in {0, 1}, x east, y north.
    std::array<std::array<std::array<Arrow, 2>, 2>, 4> rule;

    static BlockSubstitution parse(const std::string& text);
    static const std::string& builtin_config();
    static BlockSubstitution builtin();

    /// Throws unless the rule is rotation-equivariant and primitive.
    void validate() const;
};

/// 2^n x 2^n array of arrows, indexed (x, y) with y north.
struct Grid {
    std::size_t size = 0;
    std::vector<Arrow> cells;
    Arrow at(std::size_t x, std::size_t y) const { return cells[y * size + x]; }
    Arrow& at(std::size_t x, std::size_t y) { return cells[y * size + x]; }
    std::string str() const;  // text grid export, north row first
};

Grid generate_region(const BlockSubstitution& b, Arrow seed, unsigned n);

struct ChairConsistency {
    bool ok = false;
    std::size_t triominoes = 0;     // chairs derived in the interior
    std::size_t bad_vertices = 0;   // interior vertices with in-degree not 0 or 3
};

/// Derivation check: every interior vertex has either 0 or 3 of its four
/// surrounding arrows pointing at it; the 3-arrow vertices glue into
/// disjoint L-triominoes covering every interior cell.
ChairConsistency chair_consistency(const Grid& g);

struct Patch2D {
    // Offset cells, sorted; offsets relative to the patch's SW corner.
    std::vector<std::tuple<long, long, Arrow>> cells;

    static Patch2D single(Arrow a);
    /// The full 2^k x 2^k image of a letter (an aligned supertile).
    static Patch2D supertile(const BlockSubstitution& b, Arrow seed, unsigned k);
};

std::vector<std::pair<long, long>> occurrences2d(const Grid& g,
                                                 const Patch2D& p);

struct ChairReturn {
    LatticeZn lattice;
    std::size_t occurrence_count = 0;
    bool stabilized = false;  // lattice agrees between orders n and n+1
};

/// Lattice generated by differences of occurrence positions of p in
/// sigma^n(seed); requires at least 3 occurrences.
ChairReturn return_lattice(const BlockSubstitution& b, const Patch2D& p,
                           unsigned n, Arrow seed = Arrow::NE);

}  // namespace retcoh

#endif
