#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace sitcalc {

/// Finite model: a set of instances L(w), an ordered list of situations
/// (s0 first), and per-fluent truth tables. Relational tables hold tuples of
/// (argument names..., situation name); functional tables hold tuples of
/// argument names.
struct World {
    std::string name;
    std::vector<std::string> instances;
    std::vector<std::string> situations;
    std::map<std::string, std::set<std::vector<std::string>>> rel_tables;
    std::map<std::string, std::set<std::vector<std::string>>> fun_tables;

    bool has_instance(const std::string& n) const;
    bool has_situation(const std::string& n) const;

    /// A name is interpreted if the world knows it at all: as an instance,
    /// a situation, or a tabled fluent.
    bool interprets(const std::string& n) const;
};

} // namespace sitcalc
