#include "sitcalc/fixes.hpp"

#include "sitcalc/parser.hpp"
#include "sitcalc/printer.hpp"
#include "sitcalc/typechecker.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace sitcalc {

const char* fix_kind_name(FixKind kind) {
    switch (kind) {
    case FixKind::WrapInRelationalFluent: return "wrap-in-relational-fluent";
    case FixKind::AddSituationArgument: return "add-situation-argument";
    }
    return "?";
}

namespace {

NodePtr unwrap_atom(const NodePtr& n) {
    return n->kind == NodeKind::Atom ? unwrap_atom(n->child(0)) : n;
}

void flatten_chain(const NodePtr& n, NodeKind kind, std::vector<NodePtr>& out) {
    if (n->kind == kind) {
        flatten_chain(n->child(0), kind, out);
        flatten_chain(n->child(1), kind, out);
    } else {
        out.push_back(n);
    }
}

std::optional<Type> silent_type(const TypingContext& w, const NodePtr& n) {
    DiagnosticSink sink;
    auto j = typecheck_formula(w, n, sink);
    if (!j) {
        return std::nullopt;
    }
    return j->type;
}

/// Name of the fluent (or variable) a term is headed by, atoms and
/// negations peeled.
std::string head_name(const NodePtr& n) {
    NodePtr core = unwrap_atom(n);
    while (is_neg_kind(core->kind)) {
        core = unwrap_atom(core->child(0));
    }
    switch (core->kind) {
    case NodeKind::RelFluent:
    case NodeKind::FunFluent:
    case NodeKind::Var:
        return core->name;
    default:
        return {};
    }
}

/// The statement-scoped situation variable fixes thread through new fluent
/// applications: the sole declared Situation variable when there is exactly
/// one, the alphabetically first when there are several, s0 when there are
/// none.
std::string fix_situation_variable(const TypingContext& w) {
    std::vector<std::string> vars = w.situation_variables();
    if (vars.empty()) {
        return kInitialSituation;
    }
    return vars.front();
}

std::string fresh_fluent_name(const TypingContext& w, const std::string& sit_head,
                              const std::string& term_head) {
    if (!sit_head.empty()) {
        std::string name = "in" + sit_head;
        name[2] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[2])));
        if (w.fluent(name) == nullptr && !w.has_variable(name)) {
            return name;
        }
    }
    std::string base = "rel_" + (term_head.empty() ? std::string("term") : term_head);
    std::string name = base;
    for (int i = 2; w.fluent(name) != nullptr || w.has_variable(name); ++i) {
        name = base + std::to_string(i);
    }
    return name;
}

/// E006 with one Situation side and one Object side: wrap the Object side
/// in a fresh relational fluent so both sides denote situations.
std::vector<Fix> fix_equality(const SourceProgram& program, const TypingContext& w,
                              const Diagnostic& diagnostic) {
    const NodePtr& eq = diagnostic.node;
    auto lhs_t = silent_type(w, eq->child(0));
    auto rhs_t = silent_type(w, eq->child(1));
    if (!lhs_t || !rhs_t) {
        return {};
    }
    NodePtr sit_side;
    NodePtr obj_side;
    if (*lhs_t == Type::situation() && *rhs_t == Type::object()) {
        sit_side = eq->child(0);
        obj_side = eq->child(1);
    } else if (*lhs_t == Type::object() && *rhs_t == Type::situation()) {
        sit_side = eq->child(1);
        obj_side = eq->child(0);
    } else {
        return {};
    }

    std::string name = fresh_fluent_name(w, head_name(sit_side), head_name(obj_side));
    std::string sit_var = fix_situation_variable(w);
    NodePtr replacement =
        ast::atom(ast::rel_fluent(name, {unwrap_atom(obj_side)}, ast::var(sit_var)));

    Fix fix;
    fix.kind = FixKind::WrapInRelationalFluent;
    fix.statement = diagnostic.statement;
    fix.target = obj_side->span;
    fix.original = obj_side;
    fix.replacement = std::move(replacement);
    fix.add_declaration = Declaration{Declaration::Kind::Rel, name, {Type::object()}, Span{}};
    fix.rationale = "wrap the Object-typed side in a fresh relational fluent '" + name +
                    "' so both sides of '=' denote situations";
    return {std::move(fix)};
}

/// E005 where exactly one component is an Action-typed functional-fluent
/// application and the rest are situations: give the odd one out a
/// situation argument and redeclare its fluent as relational.
std::vector<Fix> fix_conjunction(const SourceProgram& program, const TypingContext& w,
                                 const Diagnostic& diagnostic) {
    std::vector<NodePtr> parts;
    flatten_chain(diagnostic.node, diagnostic.node->kind, parts);

    NodePtr odd;
    for (const NodePtr& part : parts) {
        auto t = silent_type(w, part);
        if (!t) {
            return {};
        }
        if (*t == Type::situation()) {
            continue;
        }
        if (*t != Type::action() || odd != nullptr) {
            return {};
        }
        NodePtr core = unwrap_atom(part);
        while (is_neg_kind(core->kind)) {
            core = unwrap_atom(core->child(0));
        }
        if (core->kind != NodeKind::FunFluent) {
            return {};
        }
        odd = part;
    }
    if (odd == nullptr) {
        return {};
    }

    // Rebuild the component with the situation variable appended to the
    // application buried under its negations.
    std::string sit_var = fix_situation_variable(w);
    std::function<NodePtr(const NodePtr&)> rebuild = [&](const NodePtr& n) -> NodePtr {
        if (n->kind == NodeKind::Atom || is_neg_kind(n->kind)) {
            auto copy = std::make_shared<Node>(*n);
            copy->children[0] = rebuild(n->child(0));
            return copy;
        }
        return ast::rel_fluent(n->name, n->children, ast::var(sit_var), n->span);
    };

    NodePtr core = unwrap_atom(odd);
    while (is_neg_kind(core->kind)) {
        core = unwrap_atom(core->child(0));
    }
    const Declaration* decl = nullptr;
    for (const Declaration& d : program.declarations) {
        if (d.name == core->name && d.kind == Declaration::Kind::Fun) {
            decl = &d;
            break;
        }
    }
    if (decl == nullptr) {
        return {};
    }

    Fix fix;
    fix.kind = FixKind::AddSituationArgument;
    fix.statement = diagnostic.statement;
    fix.target = odd->span;
    fix.original = odd;
    fix.replacement = rebuild(odd);
    fix.replace_declaration =
        Declaration{Declaration::Kind::Rel, decl->name, decl->types, decl->span};
    fix.rationale = "give the Action-typed component a situation argument and redeclare '" +
                    core->name + "' as relational so every component denotes a situation";
    return {std::move(fix)};
}

NodePtr locate(const NodePtr& root, Span span, const NodePtr& original) {
    if (root->span == span && equal(root, original)) {
        return root;
    }
    for (const NodePtr& c : root->children) {
        if (NodePtr found = locate(c, span, original)) {
            return found;
        }
    }
    return nullptr;
}

std::string apply_one(SourceProgram& program, const Fix& fix) {
    if (fix.statement < 0 || fix.statement >= static_cast<int>(program.statements.size())) {
        return "fix refers to a statement that no longer exists";
    }
    Statement& stmt = program.statements[static_cast<std::size_t>(fix.statement)];
    NodePtr target = locate(stmt.body, fix.target, fix.original);
    if (target == nullptr) {
        return "stale fix: statement '" + stmt.name +
               "' no longer contains the expected expression";
    }
    NodePtr rebuilt = target == stmt.body ? fix.replacement
                                          : replace_node(stmt.body, target, fix.replacement);
    if (rebuilt == nullptr) {
        return "stale fix: statement '" + stmt.name + "' could not be rewritten";
    }
    stmt.body = rebuilt;

    if (fix.replace_declaration) {
        bool found = false;
        for (Declaration& d : program.declarations) {
            if (d.name == fix.replace_declaration->name) {
                d = *fix.replace_declaration;
                found = true;
                break;
            }
        }
        if (!found) {
            return "fix expects a declaration of '" + fix.replace_declaration->name +
                   "' that no longer exists";
        }
    }
    if (fix.add_declaration) {
        for (const Declaration& d : program.declarations) {
            if (d.name == fix.add_declaration->name) {
                return "fix would redeclare '" + d.name + "'";
            }
        }
        program.declarations.push_back(*fix.add_declaration);
    }
    return {};
}

ApplyResult reparse(const SourceProgram& program) {
    std::string text = pretty_print(program);
    ParseResult parsed = parse_program(text, program.file);
    ApplyResult result;
    if (!parsed.ok()) {
        result.error = "the rewritten program no longer parses";
        return result;
    }
    result.program = std::move(parsed.program);
    return result;
}

} // namespace

std::vector<Fix> suggest_fixes(const SourceProgram& program, const TypingContext& w,
                               const Diagnostic& diagnostic) {
    if (diagnostic.node == nullptr) {
        return {};
    }
    if (diagnostic.code == DiagCode::E006 && diagnostic.node->kind == NodeKind::Eq) {
        return fix_equality(program, w, diagnostic);
    }
    if (diagnostic.code == DiagCode::E005 &&
        (diagnostic.node->kind == NodeKind::ConjF || diagnostic.node->kind == NodeKind::DisjF)) {
        return fix_conjunction(program, w, diagnostic);
    }
    return {};
}

ApplyResult apply_fix(const SourceProgram& program, const Fix& fix) {
    SourceProgram working = program;
    std::string err = apply_one(working, fix);
    if (!err.empty()) {
        ApplyResult result;
        result.error = std::move(err);
        return result;
    }
    return reparse(working);
}

ApplyResult apply_fixes(const SourceProgram& program, const std::vector<Fix>& fixes) {
    std::vector<const Fix*> order;
    order.reserve(fixes.size());
    for (const Fix& f : fixes) {
        order.push_back(&f);
    }
    // Later spans first, so one rewrite cannot invalidate the anchors of the
    // next; the located nodes keep their original spans until the final
    // reparse.
    std::stable_sort(order.begin(), order.end(), [](const Fix* a, const Fix* b) {
        if (a->statement != b->statement) {
            return a->statement > b->statement;
        }
        return a->target.begin > b->target.begin;
    });

    SourceProgram working = program;
    for (const Fix* f : order) {
        std::string err = apply_one(working, *f);
        if (!err.empty()) {
            ApplyResult result;
            result.error = std::move(err);
            return result;
        }
    }
    return reparse(working);
}

} // namespace sitcalc
