#include "knights/matching.hpp"

#include <stdexcept>

namespace kt {

const char* name(Matching m) {
    switch (m) {
        case Matching::Horizontal: return "HORIZONTAL";
        case Matching::Vertical: return "VERTICAL";
        case Matching::Cross: return "CROSS";
    }
    return "?";
}

const char* name(MoveKind k) {
    switch (k) {
        case MoveKind::D: return "D";
        case MoveKind::V: return "V";
        case MoveKind::H: return "H";
    }
    return "?";
}

Matching apply(MoveKind k, Matching m) {
    using M = Matching;
    switch (k) {
        case MoveKind::D: return m;
        case MoveKind::V:
            return m == M::Vertical ? M::Cross : m == M::Cross ? M::Vertical : m;
        case MoveKind::H:
            return m == M::Horizontal ? M::Cross : m == M::Cross ? M::Horizontal : m;
    }
    return m;
}

GroupElement GroupElement::of(MoveKind k) {
    GroupElement g;
    for (int i = 0; i < 3; ++i) g.img_[i] = apply(k, static_cast<Matching>(i));
    return g;
}

GroupElement GroupElement::then(const GroupElement& rhs) const {
    GroupElement g;
    for (int i = 0; i < 3; ++i) g.img_[i] = rhs(img_[i]);
    return g;
}

GroupElement GroupElement::inverse() const {
    GroupElement g;
    for (int i = 0; i < 3; ++i) g.img_[static_cast<int>(img_[i])] = static_cast<Matching>(i);
    return g;
}

int GroupElement::order() const {
    GroupElement g = *this;
    int n = 1;
    while (!(g == identity())) {
        g = g.then(*this);
        ++n;
    }
    return n;
}

std::vector<MoveKind> parse_word(std::string_view word) {
    std::vector<MoveKind> out;
    for (char ch : word) {
        switch (ch) {
            case 'D': out.push_back(MoveKind::D); break;
            case 'V': out.push_back(MoveKind::V); break;
            case 'H': out.push_back(MoveKind::H); break;
            default: throw std::invalid_argument("word letters must be D, V or H");
        }
    }
    return out;
}

GroupElement GroupElement::from_word(std::string_view word) { return compose(parse_word(word)); }

GroupElement compose(const std::vector<MoveKind>& seq) {
    GroupElement g;
    for (MoveKind k : seq) g = g.then(GroupElement::of(k));
    return g;
}

const std::array<GroupElement, 6>& group_elements() {
    static const std::array<GroupElement, 6> els = [] {
        std::array<GroupElement, 6> e;
        const char* words[6] = {"", "V", "H", "VH", "HV", "VHV"};
        for (int i = 0; i < 6; ++i) e[i] = GroupElement::from_word(words[i]);
        return e;
    }();
    return els;
}

std::string GroupElement::word() const {
    static const char* words[6] = {"D", "V", "H", "VH", "HV", "VHV"};
    const auto& els = group_elements();
    for (int i = 0; i < 6; ++i)
        if (els[i] == *this) return words[i];
    return "?";
}

std::array<std::array<GroupElement, 6>, 6> cayley_table() {
    std::array<std::array<GroupElement, 6>, 6> t;
    const auto& els = group_elements();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) t[i][j] = els[i].then(els[j]);
    return t;
}

bool single_cycle(Matching start, const GroupElement& effect, Matching end) {
    return effect(start) != end;
}

}  // namespace kt
