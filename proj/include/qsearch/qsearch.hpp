// qsearch.hpp - everything except the command-line layer.
#pragma once

#include "qsearch/corevec.hpp"
#include "qsearch/errors.hpp"
#include "qsearch/geometry.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/qsl.hpp"
#include "qsearch/vrotor.hpp"
