// The acceptance suite: one check per shipped criterion, each printing a
// single pass/fail line. Used by both the ctest binary and `knot verify`.

#pragma once

#include <iosfwd>
#include <string>

namespace knotlib::verify {

struct Options {
    std::string data_dir = "data";
    unsigned seed = 20130927;
};

// Runs every criterion; returns true iff none failed. Criteria whose data
// files are absent are skipped with a warning, not failed.
bool run_all(const Options& opt, std::ostream& out);

}  // namespace knotlib::verify
