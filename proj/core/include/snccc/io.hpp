#pragma once

#include <filesystem>
#include <string>

#include "snccc/construction.hpp"
#include "snccc/correlation.hpp"
#include "snccc/recipe.hpp"
#include "snccc/verification.hpp"

namespace snccc {

// Text documents are JSON.  Code entries are integers for the ternary
// alphabet and [re, im] pairs otherwise; each sequence sits on its own line
// so documents diff cleanly.  Doubles are written in shortest round-trip
// form, so load(save(x)) == x bit for bit.
//
//   code set:  {"format": "snccc-codeset", "version": "1", "params": {...}, "codes": [...]}
//   family:    {"format": "snccc-family",  "version": "1", "params": {...},
//               "provenance": {...}, "sets": [[...], ...]}
//   recipe:    {"format": "snccc-recipe",  "version": "1", "seed": ..., "P": ..., ...}

std::string codeset_to_string(const CodeSet& set);
CodeSet codeset_from_string(const std::string& text);
void save_codeset(const CodeSet& set, const std::filesystem::path& path);
CodeSet load_codeset(const std::filesystem::path& path);

std::string family_to_string(const CodeFamily& family);
/// Accepts family documents and plain code-set documents (as a one-set family).
CodeFamily family_from_string(const std::string& text);
void save_family(const CodeFamily& family, const std::filesystem::path& path);
CodeFamily load_family(const std::filesystem::path& path);

std::string recipe_to_string(const Recipe& recipe);
Recipe recipe_from_string(const std::string& text);
void save_recipe(const Recipe& recipe, const std::filesystem::path& path);
Recipe load_recipe(const std::filesystem::path& path);

/// CSV with header "tau,re,im,abs", one row per shift in profile order.
std::string profile_to_csv(const CorrelationProfile& profile);
void export_profile_csv(const CorrelationProfile& profile, const std::filesystem::path& path);
CorrelationProfile profile_from_csv(const std::string& text, CorrelationMode mode);

std::string report_to_json(const VerificationReport& report);
/// Several reports plus an overall verdict.
std::string reports_to_json(const std::vector<VerificationReport>& reports);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace snccc
