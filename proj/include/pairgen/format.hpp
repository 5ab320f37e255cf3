#pragma once

#include <complex>
#include <string>

namespace pairgen {

// All emitted numbers use a fixed 17-significant-digit lowercase scientific
// format so that CSV/JSON outputs are byte-identical across runs.
std::string format_double(double x);

// Same format, but non-finite values become "null" so the result stays
// inside strict JSON.
std::string json_number(double x);

std::string json_complex(std::complex<double> z);  // [re, im]

std::string json_quote(const std::string& s);

}  // namespace pairgen
