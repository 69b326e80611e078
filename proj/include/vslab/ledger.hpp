#pragma once

#include <cstdint>

namespace vslab {

// Cost accounting shared by all search and walk routines. Counters only
// grow; merging two ledgers is plain addition, so partial counts from
// independent workers can be combined in any order.
struct QueryLedger {
  std::uint64_t classicalQueries = 0;
  std::uint64_t quantumQueries = 0;
  std::uint64_t membershipQueries = 0;
  std::uint64_t walkApplications = 0;
  std::uint64_t arithmeticOps = 0;

  QueryLedger& operator+=(const QueryLedger& o) {
    classicalQueries += o.classicalQueries;
    quantumQueries += o.quantumQueries;
    membershipQueries += o.membershipQueries;
    walkApplications += o.walkApplications;
    arithmeticOps += o.arithmeticOps;
    return *this;
  }

  friend QueryLedger operator+(QueryLedger a, const QueryLedger& b) {
    a += b;
    return a;
  }

  bool operator==(const QueryLedger&) const = default;
};

// Price of touching an oracle once, split by resource type.
struct QueryCost {
  std::uint64_t classical = 0;
  std::uint64_t quantum = 0;
};

}  // namespace vslab
