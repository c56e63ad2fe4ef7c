namespace cat0 {}
