#pragma once

#include "smsl/domain_spec.hpp"

#include <string>
#include <string_view>

namespace smsl {

// Domain-definition file (`.domain.json`). Constraint expressions are
// tagged objects, e.g. {"implies": [{"colocated": ["sheep", "wolf"]}, ...]}.
std::string emit_domain(const DomainSpec& spec);

// Throws SyntaxError, SchemaError, MalformedExpression or InvalidDomain.
DomainSpec parse_domain(std::string_view text);

} // namespace smsl
