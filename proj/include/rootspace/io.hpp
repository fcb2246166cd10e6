/*
 * Copyright 2026 The rootspace Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <string>

#include <json.hpp>

#include "rootspace/types.hpp"

namespace rootspace {

/// Input that does not match the documented file formats; the message names
/// the offending field.
class FileFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Polynomial document: {"n": <int>, "coeffs": [[re, im], ...]} with n >= 2
/// entries a_0..a_{n-1}, leading coefficient 1 implied.
MonicPolynomial read_poly_file(const std::string& path);
MonicPolynomial poly_from_json(const nlohmann::json& doc);

/// Multiset document: {"elems": [[re, im], ...]} with n >= 2 entries.
/// Unknown extra fields are ignored.
RootMultiset read_multiset_file(const std::string& path);
RootMultiset multiset_from_json(const nlohmann::json& doc);

nlohmann::ordered_json poly_to_json(const MonicPolynomial& p);
nlohmann::ordered_json multiset_to_json(const RootMultiset& v);

/// Serializes with numbers rendered as decimal with 17 significant digits
/// (round-trip safe for double precision), objects in insertion order,
/// 2-space indentation. Deterministic byte-for-byte.
std::string to_json_text(const nlohmann::ordered_json& doc);

/// %.17g rendering of one double.
std::string format_double(double x);

}  // namespace rootspace
