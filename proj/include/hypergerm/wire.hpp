#ifndef HYPERGERM_WIRE_HPP
#define HYPERGERM_WIRE_HPP

#include "json.hpp"  // nlohmann, vendored

#include "hypergerm/calculus.hpp"
#include "hypergerm/finitecalc.hpp"
#include "hypergerm/germ.hpp"
#include "hypergerm/hindman.hpp"
#include "hypergerm/secant.hpp"

// Wire format shared by the CLI and the bindings. Every numeric leaf is a
// decimal string so no reader ever sees a binary float; small structural
// integers (orders, depths, set elements) stay JSON numbers. nlohmann keeps
// object keys sorted, which makes re-serialization byte-stable.

namespace hypergerm {

using Json = nlohmann::json;

Json to_wire(const LaurentSeries& s);
Json to_wire(const StdPart& p);
Json to_wire(const EqualityReport& r);
Json to_wire(const ChainRuleReport& r);
Json to_wire(const SecantResult& r);
Json to_wire(const DeltaSample& s);
Json to_wire(const DGammaEstimate& e);
Json to_wire(const DimensionCheck& c);
Json to_wire(const HindmanCertificate& cert);

/// Inverse of to_wire for certificates, with shape validation; throws
/// DomainError on anything malformed.
HindmanCertificate certificate_from_wire(const Json& j);

}  // namespace hypergerm

#endif
