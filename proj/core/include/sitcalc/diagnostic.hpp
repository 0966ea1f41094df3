#pragma once

#include "sitcalc/span.hpp"

#include <memory>
#include <string>
#include <vector>

namespace sitcalc {

class Node;

enum class DiagCode : std::uint16_t {
    // Name resolution and application shape
    E001 = 1, // unbound variable or fluent
    E002,     // arity mismatch
    E003,     // argument type mismatch, or no typing rule applies
    // Connectives
    E004,     // superset sides have different types
    E005,     // conjunction/disjunction is not uniformly typed
    E006,     // equality sides have different types
    // Evaluation and models
    E007,     // evaluation got stuck
    E008,     // do/poss operand is not Action-typed
    E009,     // quantified variable does not occur in the body
    E010,     // name (or construct) not interpreted by the world
    // Surface syntax
    E101 = 101, // lexical or parse error
};

const char* code_name(DiagCode code);

enum class Severity : std::uint8_t { Error, Warning };

struct RelatedSpan {
    Span span;
    std::string note;
};

struct Diagnostic {
    DiagCode code = DiagCode::E101;
    Severity severity = Severity::Error;
    std::string message;
    Span span{};
    int statement = -1; // index of the owning statement; -1 for file-level issues
    std::vector<RelatedSpan> related;

    /// Offending node, when one exists (e.g. the '=' node for E006, the
    /// conjunction for E005). Fix templates key off this.
    std::shared_ptr<const Node> node;
};

/// Collects diagnostics during a pass. Ordering is normalized on take():
/// (statement index, span start, code). An optional cap mirrors --max-errors;
/// diagnostics beyond the cap are counted but dropped.
class DiagnosticSink {
public:
    explicit DiagnosticSink(std::size_t max_errors = 0) : cap_(max_errors) {}

    void set_statement(int index) { statement_ = index; }
    int statement() const { return statement_; }

    void emit(Diagnostic d);

    bool empty() const { return diags_.empty(); }
    std::size_t dropped() const { return dropped_; }
    const std::vector<Diagnostic>& raw() const { return diags_; }

    /// Sorted snapshot; leaves the sink intact.
    std::vector<Diagnostic> sorted() const;

private:
    std::vector<Diagnostic> diags_;
    std::size_t cap_;
    std::size_t dropped_ = 0;
    int statement_ = -1;
};

} // namespace sitcalc
