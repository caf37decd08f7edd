#pragma once

#include <iosfwd>
#include <string>

namespace stellar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSelfcheck = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitMath = 3;
inline constexpr int kExitIo = 4;

struct Options {
    double tol = 1e-6;      // clustering / classification tolerance
    bool parallel = false;  // process records concurrently, output order preserved
};

int run_classify(const std::string& input, std::ostream& out, std::ostream& err,
                 const Options& opts);
int run_measure(const std::string& input, std::ostream& out, std::ostream& err,
                const Options& opts);
int run_constellation(const std::string& input, const std::string& format, std::ostream& out,
                      std::ostream& err, const Options& opts);
int run_sweep(const std::string& spec_text, std::ostream& out, std::ostream& err,
              const Options& opts);
int run_selfcheck(std::ostream& out, const Options& opts);

}  // namespace stellar::cli
