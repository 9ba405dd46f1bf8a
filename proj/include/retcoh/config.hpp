// Analysis configuration: the key = value file format read by the CLI,
// plus the bundled example systems.

#ifndef RETCOH_CONFIG_HPP
#define RETCOH_CONFIG_HPP

#include <optional>

#include "retcoh/subst1d.hpp"

namespace retcoh {

enum class LengthMode { kUnit, kSymbolic, kRational };

struct AnalysisConfig {
    std::string name;
    std::optional<Substitution> subst;
    std::optional<SturmianSpec> sturmian;
    std::size_t radius = 0;
    LengthMode length_mode = LengthMode::kSymbolic;
    std::vector<Rat> rational_lengths;     // kRational: per collared letter
    std::vector<std::string> patches;      // letter names, space-separated
    std::size_t patch_cap = 0;             // 0 = no length sweep
    unsigned order_lo = 1, order_hi = 6;
    std::size_t max_scan = std::size_t(1) << 22;

    void validate() const;  // throws on inconsistent settings
};

/// Parses the config text. Keys: name, alphabet, "rule X", radius, lengths
/// (unit | symbolic | list of rationals), patch (repeatable), patch_cap,
/// orders (A..B), max_scan, sturmian_{d,p,q,r,rho}. '#' starts a comment.
AnalysisConfig parse_config(const std::string& text);
AnalysisConfig load_config(const std::string& path);

namespace presets {

Substitution fibonacci();       // a -> ab, b -> a
Substitution thue_morse();      // a -> ab, b -> ba
Substitution three_e_morse();   // a -> aab, b -> bba
SturmianSpec sturmian_golden();  // alpha = (sqrt5 - 1)/2, rho = 0

/// Bundled configs by name: fibonacci, thue_morse, three_e_morse,
/// sturmian_golden.
const std::vector<std::string>& example_names();
AnalysisConfig example(const std::string& name);
const std::string& example_config_text(const std::string& name);

}  // namespace presets

}  // namespace retcoh

#endif
