#pragma once

#include <stdexcept>
#include <string>

namespace bcg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A generator order of 1 or below zero, or otherwise malformed group data.
class InvalidGroup : public Error {
public:
    using Error::Error;
};

class GroupMismatch : public Error {
public:
    using Error::Error;
};

/// The operation needs to exhaust the group, but the group has a free part.
class InfiniteGroup : public Error {
public:
    using Error::Error;
};

/// A guarded search would exceed its candidate budget (or is unbounded).
class SearchSpaceTooLarge : public Error {
public:
    using Error::Error;
};

/// Form data violating a well-definedness congruence.
class InvalidForm : public Error {
public:
    using Error::Error;
};

class NotAWitness : public Error {
public:
    using Error::Error;
};

class NotNormalized : public Error {
public:
    using Error::Error;
};

class NotFree : public Error {
public:
    using Error::Error;
};

class InvalidCocycle : public Error {
public:
    using Error::Error;
};

/// Malformed JSON document or schema violation.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace bcg
