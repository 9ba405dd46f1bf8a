#include "retcoh/chair.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace retcoh {

namespace {
constexpr const char* kNames[4] = {"NE", "NW", "SW", "SE"};
}

const char* arrow_name(Arrow a) { return kNames[static_cast<int>(a)]; }

Arrow arrow_from_name(const std::string& name) {
    for (int i = 0; i < 4; ++i)
        if (name == kNames[i]) return static_cast<Arrow>(i);
    throw std::invalid_argument("unknown arrow " + name);
}

Arrow rotate_ccw(Arrow a) {
    return static_cast<Arrow>((static_cast<int>(a) + 1) % 4);
}

namespace {

// Quadrant coordinates: NE = (1,1), NW = (0,1), SW = (0,0), SE = (1,0).
void quadrant_coords(Arrow q, std::size_t& qx, std::size_t& qy) {
    switch (q) {
        case Arrow::NE: qx = 1; qy = 1; break;
        case Arrow::NW: qx = 0; qy = 1; break;
        case Arrow::SW: qx = 0; qy = 0; break;
        case Arrow::SE: qx = 1; qy = 0; break;
    }
}

}  // namespace

BlockSubstitution BlockSubstitution::parse(const std::string& text) {
    BlockSubstitution b;
    std::array<bool, 4> have_letter{};
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string lhs, eq;
        if (!(ls >> lhs)) continue;
        if (!(ls >> eq) || eq != "=")
            throw std::invalid_argument("chair rule: expected '=' in: " + line);
        Arrow letter = arrow_from_name(lhs);
        std::array<bool, 4> have_quadrant{};
        std::string tok;
        while (ls >> tok) {
            auto colon = tok.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("chair rule: expected QUAD:ARROW, got " +
                                            tok);
            Arrow quad = arrow_from_name(tok.substr(0, colon));
            Arrow img = arrow_from_name(tok.substr(colon + 1));
            std::size_t qx, qy;
            quadrant_coords(quad, qx, qy);
            b.rule[static_cast<int>(letter)][qy][qx] = img;
            have_quadrant[static_cast<int>(quad)] = true;
        }
        for (bool h : have_quadrant)
            if (!h)
                throw std::invalid_argument("chair rule: missing quadrant in: " +
                                            line);
        have_letter[static_cast<int>(letter)] = true;
    }
    for (int i = 0; i < 4; ++i)
        if (!have_letter[i])
            throw std::invalid_argument(std::string("chair rule: no rule for ") +
                                        kNames[i]);
    return b;
}

const std::string& BlockSubstitution::builtin_config() {
    // Every sub-block cell points at the block center, except the cell in
    // the quadrant the parent arrow points to, which keeps the parent arrow.
    static const std::string cfg =
        "NE = SW:NE SE:NW NW:SE NE:NE\n"
        "NW = SW:NE SE:NW NW:NW NE:SW\n"
        "SW = SW:SW SE:NW NW:SE NE:SW\n"
        "SE = SW:NE SE:SE NW:SE NE:SW\n";
    return cfg;
}

BlockSubstitution BlockSubstitution::builtin() {
    BlockSubstitution b = parse(builtin_config());
    b.validate();
    return b;
}

void BlockSubstitution::validate() const {
    // Rotation equivariance: rotating the parent arrow by 90 degrees
    // rotates the output block and its arrows by 90 degrees.
    for (int a = 0; a < 4; ++a) {
        Arrow ra = rotate_ccw(static_cast<Arrow>(a));
        for (std::size_t qy = 0; qy < 2; ++qy)
            for (std::size_t qx = 0; qx < 2; ++qx) {
                Arrow img = rule[a][qy][qx];
                // CCW about the block center: (qx, qy) -> (1 - qy, qx).
                std::size_t rx = 1 - qy, ry = qx;
                if (rule[static_cast<int>(ra)][ry][rx] != rotate_ccw(img))
                    throw std::invalid_argument(
                        "chair rule is not rotation-equivariant (letter " +
                        std::string(kNames[a]) + ")");
            }
    }
    // Primitivity: every arrow appears in some power of every image.
    std::array<std::set<int>, 4> reach;
    for (int a = 0; a < 4; ++a)
        for (std::size_t qy = 0; qy < 2; ++qy)
            for (std::size_t qx = 0; qx < 2; ++qx)
                reach[a].insert(static_cast<int>(rule[a][qy][qx]));
    for (int step = 0; step < 4; ++step) {
        for (int a = 0; a < 4; ++a) {
            std::set<int> next = reach[a];
            for (int t : reach[a])
                next.insert(reach[t].begin(), reach[t].end());
            reach[a] = std::move(next);
        }
    }
    for (int a = 0; a < 4; ++a)
        if (reach[a].size() != 4)
            throw std::invalid_argument("chair rule is not primitive");
}

Grid generate_region(const BlockSubstitution& b, Arrow seed, unsigned n) {
    Grid g;
    g.size = 1;
    g.cells = {seed};
    for (unsigned i = 0; i < n; ++i) {
        Grid next;
        next.size = 2 * g.size;
        next.cells.resize(next.size * next.size);
        for (std::size_t y = 0; y < g.size; ++y)
            for (std::size_t x = 0; x < g.size; ++x) {
                int a = static_cast<int>(g.at(x, y));
                for (std::size_t qy = 0; qy < 2; ++qy)
                    for (std::size_t qx = 0; qx < 2; ++qx)
                        next.at(2 * x + qx, 2 * y + qy) = b.rule[a][qy][qx];
            }
        g = std::move(next);
    }
    return g;
}

std::string Grid::str() const {
    std::ostringstream os;
    for (std::size_t yy = size; yy-- > 0;) {
        for (std::size_t x = 0; x < size; ++x) {
            if (x) os << ' ';
            os << arrow_name(at(x, yy));
        }
        os << '\n';
    }
    return os.str();
}

ChairConsistency chair_consistency(const Grid& g) {
    ChairConsistency r;
    r.ok = true;
    for (std::size_t vy = 1; vy < g.size; ++vy)
        for (std::size_t vx = 1; vx < g.size; ++vx) {
            int in = 0;
            if (g.at(vx - 1, vy - 1) == Arrow::NE) ++in;
            if (g.at(vx, vy - 1) == Arrow::NW) ++in;
            if (g.at(vx - 1, vy) == Arrow::SE) ++in;
            if (g.at(vx, vy) == Arrow::SW) ++in;
            if (in == 3)
                ++r.triominoes;
            else if (in != 0) {
                ++r.bad_vertices;
                r.ok = false;
            }
        }
    return r;
}

Patch2D Patch2D::single(Arrow a) {
    Patch2D p;
    p.cells = {{0, 0, a}};
    return p;
}

Patch2D Patch2D::supertile(const BlockSubstitution& b, Arrow seed, unsigned k) {
    Grid g = generate_region(b, seed, k);
    Patch2D p;
    for (std::size_t y = 0; y < g.size; ++y)
        for (std::size_t x = 0; x < g.size; ++x)
            p.cells.push_back({static_cast<long>(x), static_cast<long>(y),
                               g.at(x, y)});
    std::sort(p.cells.begin(), p.cells.end());
    return p;
}

std::vector<std::pair<long, long>> occurrences2d(const Grid& g,
                                                 const Patch2D& p) {
    std::vector<std::pair<long, long>> out;
    if (p.cells.empty()) return out;
    long w = 0, h = 0;
    for (const auto& [x, y, a] : p.cells) {
        w = std::max(w, x + 1);
        h = std::max(h, y + 1);
    }
    long n = static_cast<long>(g.size);
    for (long oy = 0; oy + h <= n; ++oy)
        for (long ox = 0; ox + w <= n; ++ox) {
            bool match = true;
            for (const auto& [x, y, a] : p.cells)
                if (g.at(static_cast<std::size_t>(ox + x),
                         static_cast<std::size_t>(oy + y)) != a) {
                    match = false;
                    break;
                }
            if (match) out.push_back({ox, oy});
        }
    return out;
}

namespace {

LatticeZn lattice_of_occurrences(const std::vector<std::pair<long, long>>& occ) {
    std::vector<IntVec> gens;
    for (std::size_t i = 1; i < occ.size(); ++i)
        gens.push_back({Int(occ[i].first - occ[0].first),
                        Int(occ[i].second - occ[0].second)});
    return lattice_from_generators(2, gens);
}

}  // namespace

ChairReturn return_lattice(const BlockSubstitution& b, const Patch2D& p,
                           unsigned n, Arrow seed) {
    Grid g = generate_region(b, seed, n);
    auto occ = occurrences2d(g, p);
    if (occ.size() < 3)
        throw std::runtime_error(
            "return_lattice: patch occurs fewer than 3 times in the region");
    ChairReturn r;
    r.lattice = lattice_of_occurrences(occ);
    r.occurrence_count = occ.size();
    Grid g2 = generate_region(b, seed, n + 1);
    auto occ2 = occurrences2d(g2, p);
    r.stabilized = lattice_of_occurrences(occ2) == r.lattice;
    return r;
}

}  // namespace retcoh
