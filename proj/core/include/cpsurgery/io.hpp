#pragma once

#include "cpsurgery/forgetful.hpp"
#include "cpsurgery/kerj.hpp"
#include "cpsurgery/ko_basis.hpp"
#include "cpsurgery/obstruction.hpp"
#include "cpsurgery/series.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace cpsurgery {

using json = nlohmann::ordered_json;

enum class Format { json, csv, latex, text };
Format parse_format(const std::string& s);
std::string to_string(Format f);

// Integers are JSON numbers when they fit in 64 bits and decimal strings otherwise.
json integer_to_json(const Integer& z);
Integer integer_from_json(const json& j);

// {"num": "...", "den": "..."}
json to_json(const Rational& q);
Rational rational_from_json(const json& j);

// {"offset": int, "coeffs": [rational, ...]} dense from degree 0
json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const json& j);

json to_json(const GeneratorSet& g);
json to_json(const ObstructionForm& f);
json to_json(const PontryaginClassList& p);
json to_json(const ForgetfulMatrix& fm);
json to_json(const CongruenceSystem& cs);

std::string dump(const json& j);  // two-space indent, trailing newline

// Variable names for the coefficient vectors of a form / class list.
std::vector<std::string> variable_names(int n, int l, bool with_sphere);

// LaTeX fragments in the layout of the printed tables.
std::string latex_element(const KOElement& e);
std::string latex_linear(const IntVector& coeffs, const std::vector<std::string>& vars);
std::string latex_form(const ObstructionForm& f);
std::string latex_class_terms(const std::map<int, IntVector>& classes, const std::vector<std::string>& vars);
std::string latex_congruence(const Congruence& c, const CongruenceSystem& cs);
std::string latex_matrix(const IntMatrix& m);

std::string render_ranks(int n, int k, Format f);
std::string render_kerj(const GeneratorSet& g, Format f);
std::string render_obstruction(const ObstructionForm& form, const PontryaginClassList& pc, Format f);
std::string render_pontryagin(const PontryaginClassList& pc, Format f);
std::string render_forgetful(const ForgetfulMatrix& fm, Format f);
std::string render_congruences(const CongruenceSystem& cs, Format f);
std::string render_check(int n, int l, const CheckResult& r, Format f);

}  // namespace cpsurgery
