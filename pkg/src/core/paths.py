from pathlib import Path

PROJECT_DIR = Path(__file__).resolve().parent.parent.parent

SRC_DIR = PROJECT_DIR / "src"
COMMAND_IMPLEMENT_DIR = SRC_DIR / "common" / "workbench_command" / "command_implement"

LOG_FILE = PROJECT_DIR / "log.log"
CONFIG_FILE = PROJECT_DIR / "config.json"
