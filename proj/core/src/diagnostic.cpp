#include "sitcalc/diagnostic.hpp"

#include <algorithm>
#include <tuple>

namespace sitcalc {

const char* code_name(DiagCode code) {
    switch (code) {
    case DiagCode::E001: return "E001";
    case DiagCode::E002: return "E002";
    case DiagCode::E003: return "E003";
    case DiagCode::E004: return "E004";
    case DiagCode::E005: return "E005";
    case DiagCode::E006: return "E006";
    case DiagCode::E007: return "E007";
    case DiagCode::E008: return "E008";
    case DiagCode::E009: return "E009";
    case DiagCode::E010: return "E010";
    case DiagCode::E101: return "E101";
    }
    return "E???";
}

void DiagnosticSink::emit(Diagnostic d) {
    if (d.statement < 0) {
        d.statement = statement_;
    }
    if (cap_ > 0 && diags_.size() >= cap_) {
        ++dropped_;
        return;
    }
    diags_.push_back(std::move(d));
}

std::vector<Diagnostic> DiagnosticSink::sorted() const {
    std::vector<Diagnostic> out = diags_;
    std::stable_sort(out.begin(), out.end(), [](const Diagnostic& a, const Diagnostic& b) {
        return std::tuple(a.statement, a.span.begin, static_cast<int>(a.code)) <
               std::tuple(b.statement, b.span.begin, static_cast<int>(b.code));
    });
    return out;
}

} // namespace sitcalc
