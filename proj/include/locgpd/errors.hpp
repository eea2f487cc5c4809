#pragma once

#include <stdexcept>
#include <string>

namespace locgpd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedTable : Error { using Error::Error; };
struct UnitPairRemoved : Error { using Error::Error; };
struct BadParams : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct SearchSpaceTooLarge : Error { using Error::Error; };
struct SourceTargetMismatch : Error { using Error::Error; };
struct NotInversional : Error { using Error::Error; };
struct IllegalMove : Error { using Error::Error; };
struct DisconnectedFromBasepoint : Error { using Error::Error; };
struct NotComposable : Error { using Error::Error; };
struct DegenerateTriangle : Error { using Error::Error; };
struct LeftRegion : Error { using Error::Error; };
struct UndefinedProduct : Error { using Error::Error; };
struct CannotRestrict : Error { using Error::Error; };
struct BadK : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

} // namespace locgpd
