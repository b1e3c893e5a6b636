#ifndef MN_REVERIFY_HPP
#define MN_REVERIFY_HPP

#include <string>

#include <mn/report.hpp>
#include <mn/twist.hpp>

namespace mn
{

struct Reverification {
    bool ok = true;
    std::string detail; // what was re-evaluated, or what disagreed
};

// Re-checks a report's witness or certificate from its JSON alone, with naive
// loops over the ring and series tables and none of the checker code paths.
// Reports whose property is unknown here pass with a note.
Reverification reverify(const PropertyReport &report, const TwistSystem &twist);

} // namespace mn

#endif
