from django.urls import path
from django.urls.conf import include

from rest_framework.routers import DefaultRouter

from .viewsets import *

router: DefaultRouter = DefaultRouter()

router.register(r"catalog", CatalogViewset, basename="catalog")
router.register(r"locate", LocateViewset, basename="locate")
router.register(r"slope", SlopeViewset, basename="slope")
router.register(r"matsubara", MatsubaraViewset, basename="matsubara")

urlpatterns = [
    path("", include(router.urls)),
]
