#ifndef DISSOC_FAMILY_ID_HPP
#define DISSOC_FAMILY_ID_HPP

#include "dissoc/errors.hpp"

#include <string>

namespace dissoc {

// Extremal tree families T1..T5 and H, and potted families G1..G9.
enum class FamilyId {
    T1, T2, T3, T4, T5, H,
    G1, G2, G3, G4, G5, G6, G7, G8, G9,
};

inline bool is_potted_family(FamilyId id) { return id >= FamilyId::G1; }

inline const char* family_name(FamilyId id) {
    switch (id) {
        case FamilyId::T1: return "T1";
        case FamilyId::T2: return "T2";
        case FamilyId::T3: return "T3";
        case FamilyId::T4: return "T4";
        case FamilyId::T5: return "T5";
        case FamilyId::H:  return "H";
        case FamilyId::G1: return "G1";
        case FamilyId::G2: return "G2";
        case FamilyId::G3: return "G3";
        case FamilyId::G4: return "G4";
        case FamilyId::G5: return "G5";
        case FamilyId::G6: return "G6";
        case FamilyId::G7: return "G7";
        case FamilyId::G8: return "G8";
        case FamilyId::G9: return "G9";
    }
    return "?";
}

inline FamilyId family_from_name(const std::string& s) {
    static const FamilyId all[] = {
        FamilyId::T1, FamilyId::T2, FamilyId::T3, FamilyId::T4, FamilyId::T5, FamilyId::H,
        FamilyId::G1, FamilyId::G2, FamilyId::G3, FamilyId::G4, FamilyId::G5,
        FamilyId::G6, FamilyId::G7, FamilyId::G8, FamilyId::G9,
    };
    for (FamilyId id : all)
        if (s == family_name(id)) return id;
    throw DomainError("unknown family id: " + s);
}

} // namespace dissoc

#endif
