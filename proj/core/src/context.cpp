#include "sitcalc/context.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sitcalc {

TypingContext::TypingContext()
    : fluents_(std::make_shared<const std::map<std::string, Type>>()) {
    auto b = std::make_shared<Binding>();
    b->name = kInitialSituation;
    b->candidates = {Type::situation()};
    vars_ = std::move(b);
}

TypingContext TypingContext::bind(const std::string& name, std::vector<Type> candidates) const {
    if (candidates.empty()) {
        throw std::invalid_argument("binding needs at least one candidate type");
    }
    auto b = std::make_shared<Binding>();
    b->name = name;
    b->candidates = std::move(candidates);
    b->outer = vars_;
    TypingContext out = *this;
    out.vars_ = std::move(b);
    return out;
}

TypingContext TypingContext::declare_fluent(const std::string& name, Type signature) const {
    if (!is_relational_signature(signature) && !is_functional_signature(signature)) {
        throw std::invalid_argument("fluent signature must be relational or functional");
    }
    if (fluents_->count(name) > 0) {
        throw std::invalid_argument("fluent '" + name + "' is already declared");
    }
    auto table = std::make_shared<std::map<std::string, Type>>(*fluents_);
    table->emplace(name, std::move(signature));
    TypingContext out = *this;
    out.fluents_ = std::move(table);
    return out;
}

std::vector<Type> TypingContext::lookup(const std::string& name) const {
    for (const Binding* b = vars_.get(); b != nullptr; b = b->outer.get()) {
        if (b->name == name) {
            return b->candidates;
        }
    }
    return {};
}

const Type* TypingContext::fluent(const std::string& name) const {
    auto it = fluents_->find(name);
    return it == fluents_->end() ? nullptr : &it->second;
}

std::vector<std::string> TypingContext::situation_variables() const {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const Binding* b = vars_.get(); b != nullptr; b = b->outer.get()) {
        if (!seen.insert(b->name).second) {
            continue; // shadowed
        }
        if (b->name == kInitialSituation) {
            continue;
        }
        if (b->candidates.size() == 1 && b->candidates[0] == Type::situation()) {
            out.push_back(b->name);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> TypingContext::variable_names() const {
    std::set<std::string> seen;
    for (const Binding* b = vars_.get(); b != nullptr; b = b->outer.get()) {
        seen.insert(b->name);
    }
    return {seen.begin(), seen.end()};
}

} // namespace sitcalc
