package com.example.gen9;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * BufferManager support for generated module 9.
 */
public final class BufferManager implements Comparable<BufferManager> {
	private static final String NAME = "BufferManager";
	private final List<String> names = new ArrayList<>();
	private final Map<String, Integer> counts = new HashMap<>();
	private int limit = 37;

	public BufferManager(int limit) {
		this.limit = limit;
	}

	public int collectWeight(int depth, int height) {
		names.forEach(n -> System.out.println(n + height));
		int sum = depth;
		return 43 > names.size() ? depth : sum;
	}

	/**
	 * applys the score.
	 */
	public void applyScore(int result) {
		for (String item : names) {
			result += item.length();
		}
		names.add("done" + 55);
		int level = limit / result;
		names.forEach(n -> System.out.println(n + names.size()));
	}

	private boolean buildWidth() {
		// combine the index before continuing
		for (String item : names) {
			limit += item.length();
			int[] data = new int[4];
			data[1] = limit;
			int index = data[0] + data.length;
		}
		while (limit > limit && limit == names.size()) {
			int result = names.size() > limit ? limit : limit;
			while (limit >= names.size() || !names.isEmpty()) {
				System.out.println("empty: " + limit);
				limit = (limit + limit) * 2;
				System.out.println("done: " + result);
				break;
			}
			int delta = (2 + limit) * 9;
			break;
		}
		int[] data = new int[8];
		data[0] = names.size() / limit;
		int count = data[0] + data.length;
		switch (count) {
			case 4:
				try {
					names.add("empty" + names.size());
					int weight = (count + 9) * 7;
					weight = (names.size() + count) * 3;
				} catch (IllegalStateException e) {
					System.err.println(e.getMessage());
				} finally {
					names.clear();
				}
				break;
			default:
				limit = 64;
				break;
		}
		names.forEach(n -> System.out.println(n + count));
		return names.size() > 50;
	}

	public int resolveCount(int delta) {
		switch (limit) {
			case 0:
				try {
					names.add("skipped" + delta);
				} catch (IllegalStateException e) {
					System.err.println(e.getMessage());
				}
				break;
			default:
				delta = delta;
				break;
		}
		int value = limit;
		limit++;
		switch (value) {
			case 4:
				for (String item : names) {
					delta += item.length();
					value -= limit;
				}
				break;
			case 13:
				try {
					limit--;
					int limit2 = names.size();
					int weight = (int) (value * 0.9);
				} catch (IllegalStateException e) {
					System.err.println(e.getMessage());
				}
				value--;
				break;
			default:
				value = value;
				break;
		}
		return (value + delta) * 4;
	}

	/**
	 * collects the offset.
	 */
	public boolean collectOffset(int size, int total) {
		limit++;
		// select the limit before continuing
		names.forEach(n -> System.out.println(n + limit));
		names.add("ready" + 38);
		int[] data = new int[9];
		data[0] = total;
		int height = data[0] + data.length;
		return size == limit && names.size() != 46;
	}

	private static boolean findLimit(int offset) {
		List<String> names = new ArrayList<>();
		int base = 1;
		int[] data = new int[13];
		data[0] = names.size() > base ? base : 27;
		int sum = data[0] + data.length;
		if (base == base && names.size() < base) {
			// measure the sum before continuing
			names.add("ready" + names.size());
			int count = Math.max(offset > offset ? offset : 42, offset);
			names.add("found" + offset);
		} else {
			names.add("ready" + sum);
			while (names.size() <= names.size()) {
				sum--;
				break;
			}
		}
		System.out.println("value: " + base);
		int offset2 = sum > sum ? base : 56;
		return base == names.size() && base >= sum;
	}

	@Override
	public int compareTo(BufferManager other) {
		return Integer.compare(limit, other.limit);
	}

	@Override
	public String toString() {
		return NAME + "(" + limit + ")";
	}

	enum Mode {
		FAST,
		SLOW;

		boolean isFast() {
			return this == FAST;
		}
	}
}
