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
#include "rootspace/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace rootspace {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileFormatError("cannot open file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw FileFormatError("invalid JSON in " + path + ": " + e.what());
    }
    return doc;
}

Complex parse_entry(const json& item, const char* field, std::size_t index) {
    const std::string where = std::string(field) + "[" + std::to_string(index) + "]";
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number()) {
        throw FileFormatError(where + ": expected a [re, im] pair of numbers");
    }
    const Complex z{item[0].get<double>(), item[1].get<double>()};
    if (!is_finite(z)) throw FileFormatError(where + ": entries must be finite");
    return z;
}

std::vector<Complex> parse_entries(const json& doc, const char* field, std::size_t expected) {
    if (!doc.contains(field) || !doc[field].is_array()) {
        throw FileFormatError(std::string(field) + ": missing or not an array");
    }
    const json& arr = doc[field];
    if (expected != 0 && arr.size() != expected) {
        throw FileFormatError(std::string(field) + ": expected " + std::to_string(expected) +
                              " entries, got " + std::to_string(arr.size()));
    }
    std::vector<Complex> out;
    out.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(parse_entry(arr[i], field, i));
    return out;
}

ordered_json complex_array(const std::vector<Complex>& zs) {
    ordered_json arr = ordered_json::array();
    for (const Complex& z : zs) arr.push_back(ordered_json::array({z.real(), z.imag()}));
    return arr;
}

void emit(const ordered_json& node, std::string& out, int depth) {
    const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(depth + 1) * 2, ' ');
    switch (node.type()) {
        case ordered_json::value_t::object: {
            if (node.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            std::size_t i = 0;
            for (const auto& [key, value] : node.items()) {
                out += inner;
                out += ordered_json(key).dump();
                out += ": ";
                emit(value, out, depth + 1);
                if (++i < node.size()) out += ",";
                out += "\n";
            }
            out += indent + "}";
            return;
        }
        case ordered_json::value_t::array: {
            if (node.empty()) {
                out += "[]";
                return;
            }
            // Numeric pairs such as [re, im] stay on one line.
            const bool flat = std::all_of(node.begin(), node.end(), [](const ordered_json& v) {
                return v.is_number() || v.is_boolean() || v.is_string() || v.is_null();
            });
            if (flat) {
                out += "[";
                for (std::size_t i = 0; i < node.size(); ++i) {
                    if (i > 0) out += ", ";
                    emit(node[i], out, depth);
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < node.size(); ++i) {
                out += inner;
                emit(node[i], out, depth + 1);
                if (i + 1 < node.size()) out += ",";
                out += "\n";
            }
            out += indent + "]";
            return;
        }
        case ordered_json::value_t::number_float:
            out += format_double(node.get<double>());
            return;
        default:
            out += node.dump();
            return;
    }
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string to_json_text(const ordered_json& doc) {
    std::string out;
    emit(doc, out, 0);
    out += "\n";
    return out;
}

MonicPolynomial poly_from_json(const json& doc) {
    if (!doc.is_object()) throw FileFormatError("document: expected a JSON object");
    if (!doc.contains("n") || !doc["n"].is_number_integer()) {
        throw FileFormatError("n: missing or not an integer");
    }
    const long long n = doc["n"].get<long long>();
    if (n < 2) throw FileFormatError("n: must be at least 2");
    return MonicPolynomial(parse_entries(doc, "coeffs", static_cast<std::size_t>(n)));
}

RootMultiset multiset_from_json(const json& doc) {
    if (!doc.is_object()) throw FileFormatError("document: expected a JSON object");
    std::vector<Complex> elems = parse_entries(doc, "elems", 0);
    if (elems.size() < 2) throw FileFormatError("elems: need at least 2 entries");
    return RootMultiset(std::move(elems));
}

MonicPolynomial read_poly_file(const std::string& path) {
    return poly_from_json(load_document(path));
}

RootMultiset read_multiset_file(const std::string& path) {
    return multiset_from_json(load_document(path));
}

ordered_json poly_to_json(const MonicPolynomial& p) {
    ordered_json doc;
    doc["n"] = p.degree();
    doc["coeffs"] = complex_array(p.coeffs());
    return doc;
}

ordered_json multiset_to_json(const RootMultiset& v) {
    ordered_json doc;
    doc["elems"] = complex_array(v.elems());
    return doc;
}

}  // namespace rootspace
