#include "retcoh/subst1d.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace retcoh {

int Substitution::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < letters.size(); ++i)
        if (letters[i] == name) return static_cast<int>(i);
    return -1;
}

RatMatrix Substitution::abelianization() const {
    RatMatrix m(size(), size());
    for (std::size_t j = 0; j < size(); ++j)
        for (char ch : rule[j]) m.at(static_cast<std::size_t>(ch), j) += 1;
    return m;
}

Word Substitution::apply(const Word& w) const {
    Word out;
    for (char ch : w) out += rule[static_cast<std::size_t>(ch)];
    return out;
}

Word Substitution::iterate(int letter, unsigned n) const {
    Word w(1, static_cast<char>(letter));
    for (unsigned i = 0; i < n; ++i) w = apply(w);
    return w;
}

Word Substitution::sample(std::size_t min_len) const {
    Word w(1, static_cast<char>(0));
    while (w.size() < min_len) {
        Word next = apply(w);
        if (next.size() == w.size())
            throw std::runtime_error(
                "substitution does not grow; cannot sample language");
        w = std::move(next);
    }
    return w;
}

IntVec Substitution::abelian_vector(const Word& w) const {
    IntVec v(size(), 0);
    for (char ch : w) v[static_cast<std::size_t>(ch)] += 1;
    return v;
}

std::string Substitution::render(const Word& w, const std::string& sep) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += sep;
        out += letters[static_cast<std::size_t>(w[i])];
    }
    return out;
}

Word Substitution::parse_word(const std::string& text) const {
    Word w;
    std::istringstream is(text);
    std::string tok;
    bool any_space = text.find_first_of(" \t") != std::string::npos;
    if (any_space) {
        while (is >> tok) {
            int i = index_of(tok);
            if (i < 0) throw std::invalid_argument("unknown letter " + tok);
            w.push_back(static_cast<char>(i));
        }
        return w;
    }
    // No separators: greedy longest-match over letter names.
    std::size_t pos = 0;
    while (pos < text.size()) {
        int best = -1;
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < letters.size(); ++i)
            if (letters[i].size() > best_len &&
                text.compare(pos, letters[i].size(), letters[i]) == 0) {
                best = static_cast<int>(i);
                best_len = letters[i].size();
            }
        if (best < 0)
            throw std::invalid_argument("cannot parse word at: " +
                                        text.substr(pos));
        w.push_back(static_cast<char>(best));
        pos += best_len;
    }
    return w;
}

void Substitution::validate() const {
    if (letters.empty()) throw std::invalid_argument("empty alphabet");
    if (rule.size() != letters.size())
        throw std::invalid_argument("rule size mismatch");
    for (const Word& img : rule) {
        if (img.empty()) throw std::invalid_argument("empty rule image");
        for (char ch : img)
            if (static_cast<std::size_t>(ch) >= letters.size())
                throw std::invalid_argument("rule image letter out of range");
    }
}

bool check_primitive(const Substitution& s) {
    std::size_t n = s.size();
    std::vector<std::vector<bool>> b(n, std::vector<bool>(n, false));
    for (std::size_t j = 0; j < n; ++j)
        for (char ch : s.rule[j]) b[static_cast<std::size_t>(ch)][j] = true;
    std::vector<std::vector<bool>> acc = b;
    std::size_t bound = (n - 1) * (n - 1) + 1;
    for (std::size_t k = 1; k <= bound; ++k) {
        bool all = true;
        for (const auto& row : acc)
            for (bool x : row)
                if (!x) all = false;
        if (all) return true;
        // acc <- acc * b
        std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t t = 0; t < n; ++t)
                if (acc[i][t])
                    for (std::size_t j = 0; j < n; ++j)
                        if (b[t][j]) next[i][j] = true;
        acc = std::move(next);
    }
    return false;
}

Word fixed_point_prefix(const Substitution& s, int seed, std::size_t min_len) {
    if (seed < 0 || static_cast<std::size_t>(seed) >= s.size())
        throw std::invalid_argument("seed out of range");
    if (s.rule[static_cast<std::size_t>(seed)][0] != static_cast<char>(seed))
        throw std::invalid_argument("seed not extendable: rule(" +
                                    s.letters[static_cast<std::size_t>(seed)] +
                                    ") does not start with it");
    Word w(1, static_cast<char>(seed));
    while (w.size() < min_len) {
        Word next = s.apply(w);
        if (next.size() == w.size())
            throw std::runtime_error("substitution does not grow from seed");
        w = std::move(next);
    }
    return w.substr(0, min_len);
}

std::set<Word> legal_words(const Substitution& s, std::size_t n) {
    if (!check_primitive(s))
        throw std::invalid_argument("legal_words: substitution not primitive");
    if (n == 0) return {Word()};
    if (s.size() == 1) return {Word(n, static_cast<char>(0))};

    auto factors = [n](const Word& w, std::set<Word>& out) {
        if (w.size() < n) return;
        for (std::size_t i = 0; i + n <= w.size(); ++i)
            out.insert(w.substr(i, n));
    };

    // Seed with factors of sigma^K(letter) for every letter, K large
    // enough that every image has length >= n.
    std::set<Word> live;
    std::vector<Word> imgs;
    for (std::size_t a = 0; a < s.size(); ++a)
        imgs.push_back(Word(1, static_cast<char>(a)));
    for (;;) {
        bool all_long = true;
        for (const Word& w : imgs)
            if (w.size() < n) all_long = false;
        if (all_long) break;
        for (Word& w : imgs) w = s.apply(w);
    }
    for (const Word& w : imgs) factors(w, live);

    // Close under w -> factors of sigma(w).
    std::deque<Word> queue(live.begin(), live.end());
    while (!queue.empty()) {
        Word w = std::move(queue.front());
        queue.pop_front();
        std::set<Word> fresh;
        factors(s.apply(w), fresh);
        for (const Word& f : fresh)
            if (live.insert(f).second) queue.push_back(f);
    }
    return live;
}

std::optional<std::size_t> periodicity_screen(const Word& w,
                                              std::size_t max_period) {
    for (std::size_t p = 1; p <= max_period && p < w.size(); ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < w.size(); ++i)
            if (w[i] != w[i + p]) {
                ok = false;
                break;
            }
        if (ok) return p;
    }
    return std::nullopt;
}

CollaredAlphabet collar(const Substitution& s, std::size_t radius) {
    if (!check_primitive(s))
        throw std::invalid_argument("collar: substitution not primitive");
    CollaredAlphabet c;
    c.radius = radius;
    c.base = s;
    if (radius == 0) {
        c.collared = s;
        for (std::size_t i = 0; i < s.size(); ++i) {
            c.forget.push_back(static_cast<int>(i));
            c.window.push_back(Word(1, static_cast<char>(i)));
        }
        for (const Word& w : legal_words(s, 2))
            c.legal_pairs.insert({w[0], w[1]});
        return c;
    }

    std::size_t wlen = 2 * radius + 1;
    std::set<Word> windows = legal_words(s, wlen);
    std::map<Word, int> id;
    for (const Word& w : windows) {
        int i = static_cast<int>(c.window.size());
        id[w] = i;
        c.window.push_back(w);
        c.forget.push_back(w[radius]);
        std::string name = "(" + s.render(w.substr(0, radius)) + ")" +
                           s.render(w.substr(radius, 1)) + "(" +
                           s.render(w.substr(radius + 1)) + ")";
        c.collared.letters.push_back(name);
    }
    // Lifted rule: substitute the full context and read each image
    // letter's context from the concatenation.
    for (std::size_t i = 0; i < c.window.size(); ++i) {
        const Word& w = c.window[i];
        Word img_l = s.apply(w.substr(0, radius));
        Word img_x = s.apply(w.substr(radius, 1));
        Word full = img_l + img_x + s.apply(w.substr(radius + 1));
        Word lifted;
        for (std::size_t pos = img_l.size(); pos < img_l.size() + img_x.size();
             ++pos) {
            Word win = full.substr(pos - radius, wlen);
            auto it = id.find(win);
            if (it == id.end())
                throw std::logic_error("collar: image window not legal");
            lifted.push_back(static_cast<char>(it->second));
        }
        c.collared.rule.push_back(lifted);
    }
    c.collared.validate();
    for (const Word& w2 : legal_words(s, wlen + 1))
        c.legal_pairs.insert(
            {id.at(w2.substr(0, wlen)), id.at(w2.substr(1, wlen))});
    return c;
}

void SturmianSpec::validate() const {
    if (r == 0) throw std::invalid_argument("sturmian: r must be nonzero");
    if (q == 0 || d < 2 || mpz_perfect_square_p(d.get_mpz_t()))
        throw std::invalid_argument("sturmian: alpha is rational");
    // 0 < alpha < 1, exactly.
    Int a = p, b = q, cden = r;
    if (cden < 0) {
        a = -a;
        b = -b;
        cden = -cden;
    }
    if (floor_surd(a, b, cden, d) != 0)
        throw std::invalid_argument("sturmian: alpha not in (0, 1)");
}

Int floor_surd(const Int& a, const Int& b, const Int& c, const Int& d) {
    if (c <= 0) throw std::invalid_argument("floor_surd: c must be positive");
    Int n;
    if (b == 0) {
        n = a;
    } else {
        Int sq = b * b * d, root;
        mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
        // b*sqrt(d) lies strictly inside (root, root+1) resp. (-root-1, -root).
        if (b > 0)
            n = a + root;
        else
            n = a - root - 1;
    }
    Int out;
    mpz_fdiv_q(out.get_mpz_t(), n.get_mpz_t(), c.get_mpz_t());
    return out;
}

Word sturmian_prefix(const SturmianSpec& spec, std::size_t n) {
    spec.validate();
    Int p = spec.p, q = spec.q, r = spec.r;
    if (r < 0) {
        p = -p;
        q = -q;
        r = -r;
    }
    Int u = spec.rho.get_num(), v = spec.rho.get_den();
    Int c = r * v;
    Word w;
    Int prev = floor_surd(u * r, 0, c, spec.d);
    for (std::size_t k = 1; k <= n; ++k) {
        Int kk(static_cast<unsigned long>(k));
        Int cur = floor_surd(kk * p * v + u * r, kk * q * v, c, spec.d);
        w.push_back(cur > prev ? char(1) : char(0));
        prev = cur;
    }
    return w;
}

}  // namespace retcoh
