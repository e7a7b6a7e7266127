#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace kt {

// Pairings of a quartet by position:
//   HORIZONTAL (tl,tr)(bl,br), VERTICAL (tl,bl)(tr,br), CROSS (tl,br)(tr,bl)
enum class Matching { Horizontal = 0, Vertical = 1, Cross = 2 };
enum class MoveKind { D, V, H };

const char* name(Matching m);
const char* name(MoveKind k);

class GroupElement {
public:
    GroupElement() = default;
    static GroupElement identity() { return {}; }
    static GroupElement of(MoveKind k);
    static GroupElement from_word(std::string_view word);

    Matching operator()(Matching m) const { return img_[static_cast<int>(m)]; }
    // this first, then rhs
    GroupElement then(const GroupElement& rhs) const;
    GroupElement inverse() const;
    int order() const;
    // one of D, V, H, VH, HV, VHV
    std::string word() const;
    bool fixes(Matching m) const { return (*this)(m) == m; }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;

private:
    std::array<Matching, 3> img_{Matching::Horizontal, Matching::Vertical, Matching::Cross};
};

Matching apply(MoveKind k, Matching m);
GroupElement compose(const std::vector<MoveKind>& seq);
std::vector<MoveKind> parse_word(std::string_view word);

// Elements in canonical order D, V, H, VH, HV, VHV.
const std::array<GroupElement, 6>& group_elements();
std::array<std::array<GroupElement, 6>, 6> cayley_table();

// Whether the two junction matchings joined through the traversal effect form one 4-cycle.
bool single_cycle(Matching start, const GroupElement& effect, Matching end);

}  // namespace kt
