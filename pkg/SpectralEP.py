import sys

import loguru

from src.core.paths import LOG_FILE

# stdout 只输出 JSON 报告, stderr 的日志在解析出 --log-level 之后由 MainPresenter 添加
loguru.logger.remove()
loguru.logger.add(LOG_FILE, rotation="1 day", retention="1 week", level="DEBUG")

sys.stdout.reconfigure(encoding="utf-8")
sys.stderr.reconfigure(encoding="utf-8")


@loguru.logger.catch(reraise=True)
def main() -> int:
    from src.presenter.main_presenter import MainPresenter

    return MainPresenter().run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
