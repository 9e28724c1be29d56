// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GRADED_REPORT_HPP
#define GRADED_REPORT_HPP

#include "graded/field.hpp"

#include "json.hpp"

#include <string>

namespace graded {

using Json = nlohmann::ordered_json;

inline constexpr const char* kArtifactVersion = "1.0.0";

/// Deterministic JSON report: same inputs and version give byte-identical
/// output (insertion-ordered keys, canonical element printing).
class Report {
  public:
    explicit Report(std::string command);

    Json& inputs() { return doc_["inputs"]; }
    Json& results() { return doc_["results"]; }
    void add_check(const std::string& name, bool ok, const std::string& details = "");
    /// Records the irreducible modulus and generator fixed for F_{p^m}.
    void field_presentation(const FieldPtr& F);

    bool all_ok() const { return all_ok_; }
    const Json& json() const { return doc_; }
    std::string str(int indent = 2) const { return doc_.dump(indent); }

  private:
    Json doc_;
    bool all_ok_ = true;
};

/// Runs the module invariants and the worked splitting example end to end;
/// deterministic under the seed.
Json selfcheck_report(unsigned long long seed);

} // namespace graded

#endif
