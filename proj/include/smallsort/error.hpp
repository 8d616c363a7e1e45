#pragma once

#include <stdexcept>
#include <string>

namespace smallsort {

//! Base of all errors raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

//! An element count or sequence length is outside the accepted range.
class SizeError : public Error
{
public:
    using Error::Error;
};

//! A channel index does not fit the network it belongs to.
class RangeError : public Error
{
public:
    using Error::Error;
};

//! Exhaustive enumeration was requested beyond its cap.
class CapacityError : public Error
{
public:
    using Error::Error;
};

//! Malformed textual input (network files, config strings, CSV).
class ParseError : public Error
{
public:
    using Error::Error;
};

//! A numeric parameter violates its domain (zero seed, bad block size...).
class ParameterError : public Error
{
public:
    using Error::Error;
};

//! A sorter produced an unsorted array or lost/duplicated elements.
class CorrectnessError : public Error
{
public:
    using Error::Error;
};

//! Aggregation input is missing a (sorter, size) cell.
class IncompleteDataError : public Error
{
public:
    using Error::Error;
};

} // namespace smallsort
