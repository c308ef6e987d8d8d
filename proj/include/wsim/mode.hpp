// mode.hpp
//
// Optical mode labels for the W-state generation network. A mode is
// identified by site, network stage, and polarization. Labels order
// canonically by (site ascending, stage a..u, H before V), which fixes
// the serialization and occupation-vector layout everywhere else.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wsim {

// Network stages in canonical order. Stage t covers both the ancilla
// source (site 0) and the split ancilla arms t_1..t_N.
enum class stage : std::uint8_t { a, b, c, d, e, f, s, t, u };

enum class polarization : std::uint8_t { none, horizontal, vertical };

struct mode_label {
    int site = 0;
    stage st = stage::a;
    polarization pol = polarization::none;

    friend auto operator<=>(const mode_label&, const mode_label&) = default;
};

inline char stage_char(stage s) {
    constexpr char names[] = "abcdefstu";
    return names[static_cast<std::size_t>(s)];
}

// Wiring rule: a/s/t/u are single-polarization spatial modes (label
// polarization none), b/d carry H, c/e carry V, f carries either.
inline bool is_valid(const mode_label& m) {
    switch (m.st) {
        case stage::t:
            return m.site >= 0 && m.pol == polarization::none;
        case stage::a:
        case stage::s:
        case stage::u:
            return m.site >= 1 && m.pol == polarization::none;
        case stage::b:
        case stage::d:
            return m.site >= 1 && m.pol == polarization::horizontal;
        case stage::c:
        case stage::e:
            return m.site >= 1 && m.pol == polarization::vertical;
        case stage::f:
            return m.site >= 1 && (m.pol == polarization::horizontal ||
                                   m.pol == polarization::vertical);
    }
    return false;
}

inline std::string mode_name(const mode_label& m) {
    if (m.st == stage::t && m.site == 0) return "t";
    std::string name(1, stage_char(m.st));
    name += std::to_string(m.site);
    if (m.pol == polarization::horizontal) name += 'H';
    if (m.pol == polarization::vertical) name += 'V';
    return name;
}

inline void require_valid(const mode_label& m) {
    if (!is_valid(m))
        throw std::invalid_argument("invalid mode label " + mode_name(m));
}

inline std::vector<mode_label> sorted_modes(std::vector<mode_label> modes) {
    std::sort(modes.begin(), modes.end());
    return modes;
}

inline bool has_duplicates(std::vector<mode_label> modes) {
    std::sort(modes.begin(), modes.end());
    return std::adjacent_find(modes.begin(), modes.end()) != modes.end();
}

}  // namespace wsim
