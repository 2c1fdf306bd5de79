// Error taxonomy shared by all bwkit modules.
#pragma once

#include <stdexcept>
#include <string>

namespace bwkit {

enum class Errc {
    InvalidK,
    UnsupportedMultiplicity,
    MixedSwitchModels,
    Overflow,
    OutOfRange,
    DimensionOutOfRange,
    NotATree,
    MixedBetaInStrictMode,
    InvalidPartition,
    TooLarge,
    WrongFamilies,
    MissingCapacity,
    BadArgument,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::InvalidK: return "InvalidK";
        case Errc::UnsupportedMultiplicity: return "UnsupportedMultiplicity";
        case Errc::MixedSwitchModels: return "MixedSwitchModels";
        case Errc::Overflow: return "Overflow";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::DimensionOutOfRange: return "DimensionOutOfRange";
        case Errc::NotATree: return "NotATree";
        case Errc::MixedBetaInStrictMode: return "MixedBetaInStrictMode";
        case Errc::InvalidPartition: return "InvalidPartition";
        case Errc::TooLarge: return "TooLarge";
        case Errc::WrongFamilies: return "WrongFamilies";
        case Errc::MissingCapacity: return "MissingCapacity";
        case Errc::BadArgument: return "BadArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace bwkit
