from formality3.review.store import ReviewError, ReviewItem, ReviewStore

__all__ = ["ReviewError", "ReviewItem", "ReviewStore"]
