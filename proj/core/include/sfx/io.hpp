#ifndef SFX_IO_HPP
#define SFX_IO_HPP

#include "sfx/io/corpus.hpp"
#include "sfx/io/document.hpp"
#include "sfx/io/expression.hpp"
#include "sfx/io/notation.hpp"

#endif
