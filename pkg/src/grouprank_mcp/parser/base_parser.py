#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Base parser module.
This module provides a regex tokenizer and recursive-descent helpers shared by
the presentation and expression parsers.
"""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, List, NamedTuple, Optional, Sequence, Tuple

import regex
from loguru import logger

from grouprank_mcp.errors import ErrorCode
from grouprank_mcp.errors import GroupRankError
from grouprank_mcp.errors import ParseError


class Token(NamedTuple):
    kind: str
    value: str
    position: int


EOF = "EOF"


class BaseParser(ABC):
    """
    Base abstract class for the text parsers.
    Subclasses declare TOKEN_SPEC as (kind, pattern) pairs, tried in order,
    and implement parse().
    """

    TOKEN_SPEC: Sequence[Tuple[str, str]] = ()

    def __init__(self, text: str):
        """
        Initialize the parser with the text to parse.

        Args:
            text: Input text. Whitespace between tokens is ignored.
        """
        self.text = text
        self.tokens = self._tokenize()
        self.index = 0

    @staticmethod
    def read_file(file_path: str) -> str:
        """
        Read the UTF-8 content of a file.

        Args:
            file_path: Path to the file to read.

        Returns:
            str: The file content.

        Raises:
            GroupRankError: FILE_NOT_FOUND if the file cannot be read,
                PARSING_ERROR if it is not valid UTF-8.
        """
        try:
            content = Path(file_path).read_text(encoding="utf-8")
        except FileNotFoundError as e:
            raise GroupRankError(f"File not found: {file_path}", ErrorCode.FILE_NOT_FOUND) from e
        except UnicodeDecodeError as e:
            raise GroupRankError(f"File {file_path} is not valid UTF-8: {e.reason}", ErrorCode.PARSING_ERROR) from e
        except OSError as e:
            raise GroupRankError(f"Error reading file {file_path}: {e}", ErrorCode.FILE_NOT_FOUND) from e
        logger.debug(f"Read {len(content)} characters from {file_path}")
        return content

    @classmethod
    def from_file(cls, file_path: str) -> "BaseParser":
        """Create a parser over the content of a file."""
        return cls(cls.read_file(file_path))

    @classmethod
    def _pattern(cls):
        # Compiled once per subclass.
        compiled = cls.__dict__.get("_compiled")
        if compiled is None:
            parts = [f"(?P<{kind}>{pattern})" for kind, pattern in cls.TOKEN_SPEC]
            parts += [r"(?P<SKIP>\s+)", r"(?P<MISMATCH>.)"]
            compiled = regex.compile("|".join(parts), regex.DOTALL)
            cls._compiled = compiled
        return compiled

    def _tokenize(self) -> List[Token]:
        tokens = []
        for match in self._pattern().finditer(self.text):
            kind = match.lastgroup
            if kind == "SKIP":
                continue
            if kind == "MISMATCH":
                raise ParseError(f"unexpected character {match.group()!r}", self.text, match.start())
            tokens.append(Token(kind, match.group(), match.start()))
        tokens.append(Token(EOF, "", len(self.text)))
        return tokens

    def _peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def _at(self, *kinds: str) -> bool:
        return self._peek().kind in kinds

    def _advance(self) -> Token:
        token = self._peek()
        if token.kind != EOF:
            self.index += 1
        return token

    def _accept(self, kind: str) -> Optional[Token]:
        if self._at(kind):
            return self._advance()
        return None

    def _expect(self, kind: str, description: Optional[str] = None) -> Token:
        token = self._peek()
        if token.kind != kind:
            self._fail(f"expected {description or kind}", token)
        return self._advance()

    def _fail(self, message: str, token: Optional[Token] = None):
        token = token or self._peek()
        found = "end of input" if token.kind == EOF else repr(token.value)
        raise ParseError(f"{message}, found {found}", self.text, token.position)

    def _expect_end(self):
        if not self._at(EOF):
            self._fail("expected end of input")

    @abstractmethod
    def parse(self) -> Any:
        """
        Parse the whole input.

        Returns:
            Any: The parsed value.
        """
        pass
