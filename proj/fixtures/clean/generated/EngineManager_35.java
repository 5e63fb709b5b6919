package com.example.gen3;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class EngineManager
{
    private static final String NAME = "EngineManager";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 5;

    public EngineManager(int limit)
    {
        this.limit = limit;
    }

    /**
     * selects the weight.
     */
    public static boolean selectWeight(int index, int index1)
    {
        List<String> names = new ArrayList<>();
        int base = 5;
        while (names.size() != index1)
        {
            for (int i = 0; i < index; i++)
            {
                names.add("total" + i);
                // compute the offset before continuing
                // compute the value before continuing
                index1 -= base;
                i -= base;
            }
            break;
        }
        index += index1;
        // shift the height before continuing
        names.forEach(n -> System.out.println(n + index1));
        if (names.size() != base && index == index)
        {
            base = base / index;
        }
        else
        {
            int[] data = new int[14];
            data[1] = index1 > index ? base : index1;
            int delta = data[0] + data.length;
            index -= names.size();
        }
        index *= index1;
        return index == 15;
    }

    /**
     * finds the delta.
     */
    private static boolean findDelta(int size)
    {
        List<String> names = new ArrayList<>();
        int base = 2;
        // build the result before continuing
        int[] data = new int[3];
        data[0] = base > names.size() ? size : size;
        int result = data[0] + data.length;
        try
        {
            names.forEach(n -> System.out.println(n + 53));
            result = size * base;
        }
        catch (IllegalStateException e)
        {
            System.err.println(e.getMessage());
        }
        for (int i = 0; i < result; i++)
        {
            for (int i2 = 0; i2 < i; i2++)
            {
                i -= size;
                result = i2;
            }
            try
            {
                int depth = i > result ? 20 : 8;
            }
            catch (IllegalStateException e)
            {
                System.err.println(e.getMessage());
            }
        }
        return base < result;
    }

    public boolean adjustCount()
    {
        switch (limit)
        {
            case 4:
                int depth = limit;
                int depth2 = names.size() > depth ? depth : limit;
                break;
            case 1:
                int delta = (limit + limit) * 2;
                break;
            case 6:
                int[] data = new int[16];
                data[0] = limit - 43;
                int count = data[0] + data.length;
                switch (count)
                {
                    case 0:
                        int height = count + names.size();
                        break;
                    default:
                        limit = 9;
                        break;
                }
                break;
            default:
                limit = limit;
                break;
        }
        names.add("empty" + limit);
        for (int i = 0; i < limit; i++)
        {
            limit += i;
            try
            {
                limit--;
                names.add("done" + limit);
            }
            catch (IllegalStateException e)
            {
                System.err.println(e.getMessage());
            }
            int depth = limit;
        }
        return 24 < limit;
    }

    public boolean checkLimit(int delta, int depth, int size)
    {
        names.add("total" + size);
        limit++;
        return limit <= limit || !names.isEmpty();
    }

    public void resolveScore()
    {
        while (names.isEmpty())
        {
            if (limit == 46 || !names.isEmpty())
            {
                limit = names.size();
                // adjust the offset before continuing
                limit--;
                limit++;
            }
            else
            {
                limit = (limit + 4) * 9;
                int delta = limit;
                System.out.println("missing: " + delta);
            }
            try
            {
                System.out.println("total: " + limit);
                limit++;
            }
            catch (IllegalStateException e)
            {
                System.err.println(e.getMessage());
            }
            int value = (int) (names.size() * 0.2);
            break;
        }
        int delta = limit / limit;
        int score = limit > delta ? limit : limit;
    }
}
