from common.errors import KoblabError

__all__ = ["KoblabError"]
