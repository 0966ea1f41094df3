#include "sitcalc/type.hpp"

#include <stdexcept>

namespace sitcalc {

namespace {

const char* base_name(TypeKind k) {
    switch (k) {
    case TypeKind::Unit: return "Unit";
    case TypeKind::Bool: return "Bool";
    case TypeKind::Situation: return "Situation";
    case TypeKind::Action: return "Action";
    case TypeKind::Object: return "Object";
    case TypeKind::Arrow: return "Arrow";
    }
    return "?";
}

} // namespace

Type Type::arrow(std::vector<Type> params, Type result) {
    if (params.empty()) {
        throw std::invalid_argument("arrow type needs at least one parameter");
    }
    for (const Type& p : params) {
        if (p.is_arrow()) {
            throw std::invalid_argument("arrow types do not nest");
        }
    }
    if (result.is_arrow()) {
        throw std::invalid_argument("arrow types do not nest");
    }
    Type t(TypeKind::Arrow);
    t.sig_ = std::move(params);
    t.sig_.push_back(result);
    return t;
}

Type Type::relational(std::vector<Type> object_params) {
    object_params.push_back(Type::situation());
    return arrow(std::move(object_params), Type::situation());
}

Type Type::functional(std::vector<Type> params) {
    return arrow(std::move(params), Type::action());
}

std::string Type::to_string() const {
    if (!is_arrow()) {
        return base_name(kind_);
    }
    std::string out;
    for (std::size_t i = 0; i < sig_.size(); ++i) {
        if (i > 0) {
            out += " -> ";
        }
        out += sig_[i].to_string();
    }
    return out;
}

bool Type::operator==(const Type& other) const {
    if (kind_ != other.kind_) {
        return false;
    }
    if (!is_arrow()) {
        return true;
    }
    return sig_ == other.sig_;
}

bool base_type_from_name(const std::string& name, Type& out) {
    if (name == "Unit") {
        out = Type::unit();
    } else if (name == "Bool") {
        out = Type::boolean();
    } else if (name == "Situation") {
        out = Type::situation();
    } else if (name == "Action") {
        out = Type::action();
    } else if (name == "Object") {
        out = Type::object();
    } else {
        return false;
    }
    return true;
}

bool is_relational_signature(const Type& t) {
    return t.is_arrow() && t.result() == Type::situation() && t.param_count() >= 2 &&
           t.param(t.param_count() - 1) == Type::situation();
}

bool is_functional_signature(const Type& t) {
    return t.is_arrow() && t.result() == Type::action();
}

} // namespace sitcalc
