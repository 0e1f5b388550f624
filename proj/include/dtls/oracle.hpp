#ifndef DTLS_ORACLE_HPP
#define DTLS_ORACLE_HPP

#include "dtls/edits.hpp"
#include "dtls/instance.hpp"

namespace dtls {

/// Brute-force solvers. Slow by design; they exist to be obviously correct
/// and to certify the dp and subset solvers on small instances. Each guards
/// its enumeration size against a cap and refuses loudly when exceeded.
struct OracleOptions {
  double cap = 1e8;  // elementary evaluations
};

struct OracleResult {
  int min_errors = 0;
  EditScript script;
};

/// Enumerates node subsets of size at most k times grid thresholds per
/// chosen node, with majority relabeling.
OracleResult brute_force_adjust_subsets(const LocalSearchInstance& instance,
                                        const OracleOptions& options = {});

/// Enumerates complete threshold reassignments over all cuts, counting
/// changed nodes against the budget.
int brute_force_adjust_full(const LocalSearchInstance& instance,
                            const OracleOptions& options = {});

/// Enumerates node subsets of size at most k times (feature, threshold)
/// pairs per chosen node.
OracleResult brute_force_exchange(const LocalSearchInstance& instance,
                                  const OracleOptions& options = {});

}  // namespace dtls

#endif
