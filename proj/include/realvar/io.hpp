// Copyright 2026 The realvar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <json.hpp>

#include "realvar/polycore.hpp"
#include "realvar/pp.hpp"

namespace realvar {

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

/// Grammar:
///   system    := "vars" ident+ ";" (poly ";")*
///   poly      := ["+"|"-"] term (("+"|"-") term)*
///   term      := factor (("*"|"/") factor)*      division only by constants
///   factor    := atom ["^" integer]
///   atom      := number | ident | "(" poly ")"
/// "#" starts a comment running to the end of the line.
PolySystem parse_system(const std::string& text);

/// Single polynomial over the given variable names.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names);

/// Inverse of parse_system (coefficients printed with 17 significant digits).
std::string format_system(const PolySystem& sys);

/// JSON document for a solve. Versioned by the "schema" field.
nlohmann::json result_to_json(const PolySystem& sys, const SolveConfig& cfg, const SolveResult& res);

inline constexpr const char* kJsonSchemaVersion = "realvar.solve/1";

/// Per-order tables in the layout rows = dim pi_s(G_t^perp), dim pi_s((G_t^+)^perp).
std::string render_tables(const SolveResult& res);

/// Human-readable summary: verdict, basis, border basis, roots.
std::string render_summary(const PolySystem& sys, const SolveConfig& cfg, const SolveResult& res);

}  // namespace realvar
