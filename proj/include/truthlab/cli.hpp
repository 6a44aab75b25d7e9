#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "truthlab/syntax.hpp"

namespace truthlab {

// One formula per line; blank lines and lines whose first non-space character
// is '#' are ignored. Throws IoError if the file cannot be read, ParseError
// tagged with the 1-based line on bad input.
std::vector<Formula> load_seed(const std::string& path);
std::vector<Term> load_terms(const std::string& path);

// Command-line front end. args excludes the program name. Returns the process
// exit status: 0 on success / all audit clauses passing, 1 when an audit
// reports violations, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace truthlab
