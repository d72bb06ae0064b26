#pragma once

#include <string>
#include <vector>

#include "dunklkit/report.hpp"

namespace dunklkit {

// suite names in canonical order (excluding "all")
const std::vector<std::string>& verify_suite_names();

// runs one invariant suite ("all" concatenates every suite in order);
// unknown names raise DomainError
std::vector<Check> run_suite(const std::string& name, unsigned long long seed, int threads);

}  // namespace dunklkit
