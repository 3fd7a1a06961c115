from typing import Any, Dict, Literal
from pydantic import BaseModel, Field


class CommandModel(BaseModel):
    subcommand: Literal["wg", "bg", "matrix", "hodge", "theorem-a", "fe", "constants", "verify"]
    output_format: Literal["text", "json", "csv"] = "text"
    options: Dict[str, Any] = Field(default_factory=dict)
