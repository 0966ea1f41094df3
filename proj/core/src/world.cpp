#include "sitcalc/world.hpp"

#include <algorithm>

namespace sitcalc {

bool World::has_instance(const std::string& n) const {
    return std::find(instances.begin(), instances.end(), n) != instances.end();
}

bool World::has_situation(const std::string& n) const {
    return std::find(situations.begin(), situations.end(), n) != situations.end();
}

bool World::interprets(const std::string& n) const {
    return has_instance(n) || has_situation(n) || rel_tables.count(n) > 0 ||
           fun_tables.count(n) > 0;
}

} // namespace sitcalc
