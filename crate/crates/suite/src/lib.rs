//! Holds the full-scale `acceptance` test target; the checks themselves
//! live in `frobenii::suite`.
