#include "plumbline/elliptic.hpp"

namespace plumbline {

const char* to_string(TwoTorsionLabel label)
{
    switch (label) {
    case TwoTorsionLabel::O:
        return "O";
    case TwoTorsionLabel::Half:
        return "Half";
    case TwoTorsionLabel::TauHalf:
        return "TauHalf";
    case TwoTorsionLabel::HalfPlusTauHalf:
        return "HalfPlusTauHalf";
    }
    return "?";
}

TwoTorsionLabel parse_two_torsion_label(std::string_view text)
{
    for (TwoTorsionLabel l : kTwoTorsionLabels)
        if (text == to_string(l)) return l;
    throw DomainError("unknown 2-torsion label '" + std::string(text) + "'");
}

} // namespace plumbline
