#include "sitcalc/program.hpp"

namespace sitcalc {

Type declared_signature(const Declaration& d) {
    switch (d.kind) {
    case Declaration::Kind::Rel: return Type::relational(d.types);
    case Declaration::Kind::Fun: return Type::functional(d.types);
    case Declaration::Kind::Var: break;
    }
    // Var declarations have no arrow signature; callers use d.types directly.
    return d.types.front();
}

TypingContext SourceProgram::base_context() const {
    TypingContext w;
    for (const Declaration& d : declarations) {
        if (d.kind == Declaration::Kind::Var) {
            w = w.bind(d.name, d.types);
        } else {
            w = w.declare_fluent(d.name, declared_signature(d));
        }
    }
    return w;
}

} // namespace sitcalc
