from abc import ABC, abstractmethod
from typing import Any, Optional, TypedDict


class RunOutcome(TypedDict):
    results: Any
    passed: Optional[bool]
    text: str


class BaseRunner(ABC):
    subcommand: str

    @abstractmethod
    def run(self) -> RunOutcome:
        pass
