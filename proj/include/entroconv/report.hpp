#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entroconv/certificate.hpp"
#include "entroconv/measures.hpp"

namespace entroconv {

/// One sweep row. Serialized with the fixed CSV column order
/// n, entropy, entropy_gap, kl, variation, kolmogorov, bound_af3, bound_af4,
/// certified; absent optionals become empty fields. bound_af3/bound_af4 are
/// the per-n right-hand sides of the entropy-gap and KL variation bounds.
struct SweepRecord {
    int n = 0;
    std::optional<double> entropy;
    std::optional<double> entropy_gap;
    std::optional<double> kl;
    std::optional<double> variation;
    std::optional<double> kolmogorov;
    std::optional<double> bound_af3;
    std::optional<double> bound_af4;
    std::optional<bool> certified;
};

/// Shortest round-trip decimal form of a double ("inf"/"nan" passed through).
std::string format_double(double v);

std::string sweep_to_csv(const std::vector<SweepRecord>& rows);
std::string sweep_to_json(const std::vector<SweepRecord>& rows);

std::string certificate_to_text(const Certificate& cert);
std::string certificate_to_json_text(const Certificate& cert);

const char* quantity_name(Quantity q);
const char* finiteness_name(Finiteness f);

/// Writes content to path, throwing IoError on failure.
void write_file(const std::string& path, const std::string& content);

} // namespace entroconv
