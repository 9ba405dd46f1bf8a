#include "retcoh/config.hpp"

#include "retcoh/formal.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace retcoh {

void AnalysisConfig::validate() const {
    if (subst.has_value() == sturmian.has_value())
        throw std::invalid_argument(
            "config: exactly one of a substitution and a sturmian spec is "
            "required");
    if (subst) subst->validate();
    if (sturmian) sturmian->validate();
    if (sturmian && radius != 0)
        throw std::invalid_argument("config: sturmian analyses are uncollared");
    if (order_hi <= order_lo)
        throw std::invalid_argument("config: orders must be a range A..B, A < B");
    if (max_scan == 0) throw std::invalid_argument("config: max_scan must be > 0");
    if (length_mode != LengthMode::kRational && !rational_lengths.empty())
        throw std::invalid_argument(
            "config: rational lengths given but lengths mode is not a list");
}

namespace {

std::vector<std::string> tokens_of(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

std::size_t parse_size(const std::string& key, const std::string& val) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(val, &pos);
        if (pos != val.size() || v < 0) throw std::invalid_argument(val);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad value for " + key + ": " + val);
    }
}

}  // namespace

AnalysisConfig parse_config(const std::string& text) {
    AnalysisConfig cfg;
    std::vector<std::string> alphabet;
    std::map<std::string, std::string> rules;
    std::optional<SturmianSpec> st;
    auto sturmian_field = [&]() -> SturmianSpec& {
        if (!st) st = SturmianSpec{2, 0, 0, 1, Rat(0)};
        return *st;
    };

    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (!tokens_of(line).empty())
                throw std::invalid_argument("config: expected key = value: " +
                                            line);
            continue;
        }
        auto keys = tokens_of(line.substr(0, eq));
        std::string val = line.substr(eq + 1);
        auto vals = tokens_of(val);
        if (keys.empty())
            throw std::invalid_argument("config: missing key: " + line);
        const std::string& key = keys[0];

        if (key == "name" && keys.size() == 1 && vals.size() == 1) {
            cfg.name = vals[0];
        } else if (key == "alphabet" && keys.size() == 1) {
            alphabet = vals;
        } else if (key == "rule" && keys.size() == 2) {
            std::string img;
            for (const auto& t : vals) {
                if (!img.empty()) img += ' ';
                img += t;
            }
            if (!rules.emplace(keys[1], img).second)
                throw std::invalid_argument("config: duplicate rule for " +
                                            keys[1]);
        } else if (key == "radius" && keys.size() == 1 && vals.size() == 1) {
            cfg.radius = parse_size(key, vals[0]);
        } else if (key == "lengths" && keys.size() == 1) {
            if (vals.size() == 1 && vals[0] == "unit") {
                cfg.length_mode = LengthMode::kUnit;
            } else if (vals.size() == 1 && vals[0] == "symbolic") {
                cfg.length_mode = LengthMode::kSymbolic;
            } else if (!vals.empty()) {
                cfg.length_mode = LengthMode::kRational;
                for (const auto& t : vals)
                    cfg.rational_lengths.push_back(parse_rational(t));
            } else {
                throw std::invalid_argument("config: empty lengths value");
            }
        } else if (key == "patch" && keys.size() == 1) {
            if (vals.empty())
                throw std::invalid_argument("config: empty patch");
            std::string p;
            for (const auto& t : vals) {
                if (!p.empty()) p += ' ';
                p += t;
            }
            cfg.patches.push_back(p);
        } else if (key == "patch_cap" && keys.size() == 1 && vals.size() == 1) {
            cfg.patch_cap = parse_size(key, vals[0]);
        } else if (key == "orders" && keys.size() == 1 && vals.size() == 1) {
            auto dots = vals[0].find("..");
            if (dots == std::string::npos)
                throw std::invalid_argument("config: orders must be A..B");
            cfg.order_lo = static_cast<unsigned>(
                parse_size(key, vals[0].substr(0, dots)));
            cfg.order_hi = static_cast<unsigned>(
                parse_size(key, vals[0].substr(dots + 2)));
        } else if (key == "max_scan" && keys.size() == 1 && vals.size() == 1) {
            cfg.max_scan = parse_size(key, vals[0]);
        } else if (key.rfind("sturmian_", 0) == 0 && keys.size() == 1 &&
                   vals.size() == 1) {
            std::string f = key.substr(9);
            if (f == "rho") {
                sturmian_field().rho = parse_rational(vals[0]);
            } else {
                Int v(vals[0]);
                if (f == "d")
                    sturmian_field().d = v;
                else if (f == "p")
                    sturmian_field().p = v;
                else if (f == "q")
                    sturmian_field().q = v;
                else if (f == "r")
                    sturmian_field().r = v;
                else
                    throw std::invalid_argument("config: unknown key " + key);
            }
        } else {
            throw std::invalid_argument("config: unknown key in line: " + line);
        }
    }

    if (alphabet.empty() && !rules.empty())
        throw std::invalid_argument("config: rules given without an alphabet");
    if (!alphabet.empty()) {
        Substitution s;
        s.letters = alphabet;
        for (const auto& name : alphabet) {
            auto it = rules.find(name);
            if (it == rules.end())
                throw std::invalid_argument("config: no rule for letter " + name);
            s.rule.push_back(s.parse_word(it->second));
            rules.erase(it);
        }
        if (!rules.empty())
            throw std::invalid_argument("config: rule for unknown letter " +
                                        rules.begin()->first);
        s.validate();
        cfg.subst = s;
    }
    cfg.sturmian = st;
    cfg.validate();
    return cfg;
}

AnalysisConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open config file " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return parse_config(os.str());
}

namespace presets {

namespace {

Substitution make(const std::vector<std::string>& letters,
                  const std::vector<std::string>& images) {
    Substitution s;
    s.letters = letters;
    for (const auto& img : images) s.rule.push_back(s.parse_word(img));
    s.validate();
    return s;
}

const std::map<std::string, std::string>& config_texts() {
    static const std::map<std::string, std::string> m = {
        {"fibonacci",
         "name = fibonacci\n"
         "alphabet = a b\n"
         "rule a = a b\n"
         "rule b = a\n"
         "radius = 0\n"
         "lengths = symbolic\n"
         "patch = a\n"
         "patch = a b\n"
         "patch_cap = 6\n"
         "orders = 1..6\n"},
        {"thue_morse",
         "name = thue_morse\n"
         "alphabet = a b\n"
         "rule a = a b\n"
         "rule b = b a\n"
         "radius = 1\n"
         "lengths = symbolic\n"
         "patch = a\n"
         "patch = a b b\n"
         "patch_cap = 5\n"
         "orders = 1..6\n"},
        {"three_e_morse",
         "name = three_e_morse\n"
         "alphabet = a b\n"
         "rule a = a a b\n"
         "rule b = b b a\n"
         "radius = 1\n"
         "lengths = symbolic\n"
         "patch = a\n"
         "patch_cap = 4\n"
         "orders = 1..6\n"},
        {"sturmian_golden",
         "name = sturmian_golden\n"
         "# alpha = (-1 + sqrt5)/2, the inverse golden ratio\n"
         "sturmian_d = 5\n"
         "sturmian_p = -1\n"
         "sturmian_q = 1\n"
         "sturmian_r = 2\n"
         "sturmian_rho = 0\n"
         "lengths = symbolic\n"
         "patch = a\n"
         "patch_cap = 6\n"},
    };
    return m;
}

}  // namespace

Substitution fibonacci() { return make({"a", "b"}, {"a b", "a"}); }
Substitution thue_morse() { return make({"a", "b"}, {"a b", "b a"}); }
Substitution three_e_morse() { return make({"a", "b"}, {"a a b", "b b a"}); }

SturmianSpec sturmian_golden() {
    SturmianSpec s{5, -1, 1, 2, Rat(0)};
    s.validate();
    return s;
}

const std::vector<std::string>& example_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, _] : config_texts()) v.push_back(k);
        return v;
    }();
    return names;
}

const std::string& example_config_text(const std::string& name) {
    auto it = config_texts().find(name);
    if (it == config_texts().end())
        throw std::invalid_argument("unknown example " + name);
    return it->second;
}

AnalysisConfig example(const std::string& name) {
    return parse_config(example_config_text(name));
}

}  // namespace presets

}  // namespace retcoh
